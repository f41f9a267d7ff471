"""Size caps and sweep budgets, overridable via the MODLAT_CAPS env var.

MODLAT_CAPS holds a JSON object whose keys are Caps field names, e.g.
``MODLAT_CAPS='{"max_elements": 8192}'``. Caps are read afresh on each
call so tests and CLI runs can adjust them per process.
"""

import json
import os
from dataclasses import dataclass, fields, replace

ENV_CAPS = "MODLAT_CAPS"
ENV_BACKEND = "MODLAT_BACKEND"


@dataclass(frozen=True)
class Caps:
    max_elements: int = 4096           # per ring/module carrier
    max_lattice_nodes: int = 100_000   # submodule lattice size
    max_homs: int = 65_536             # hom-set enumeration
    max_end_ring: int = 256            # endomorphism ring carrier (validation is O(n^3))
    coindependent_full: bool = False   # audit mode: quantify over all finite index subsets
    full_pair_sweep_nodes: int = 40    # lattices up to this size get exhaustive pair sweeps
    sampled_pairs: int = 600           # deterministic sample size for larger pair sweeps
    good_module_pair_product: int = 4096  # |M|*|N| bound for radical-image hom sweeps
    good_module_hom_sample: int = 256     # homs checked per (M, N) pair
    max_sum_order: int = 256              # largest sum-style construction: corpus sums,
                                          # squares M (+) M, free covers R^k


def caps_from_env(base: Caps | None = None) -> Caps:
    caps = base if base is not None else Caps()
    raw = os.environ.get(ENV_CAPS)
    if not raw:
        return caps
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ValueError(f"{ENV_CAPS} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise ValueError(f"{ENV_CAPS} must be a JSON object")
    known = {f.name for f in fields(Caps)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise ValueError(f"{ENV_CAPS} has unknown keys: {', '.join(unknown)}")
    return replace(caps, **data)


def active_caps() -> Caps:
    return caps_from_env()
