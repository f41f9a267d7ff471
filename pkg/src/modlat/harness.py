"""Built-in corpus, theorem-verification runner, and report assembly.

Check identifiers are stable tokens of this tool's CLI (thm-1.4, lem-3.4,
good-module, ...); the README lists what each one verifies. Reports are
deterministic given (corpus, caps): identical bodies for any job count,
with wall-clock fields isolated so they can be stripped for comparison.
"""

from __future__ import annotations

import hashlib
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .config import Caps, active_caps
from .core import (
    FiniteModule,
    Submodule,
    direct_sum,
    module_from_spec,
    quotient_module,
    ring_from_spec,
)
from .dimension import (
    d_values,
    hollow_dimension,
    is_semisimple,
    length,
    radical,
    socle,
    uniform_dimension,
)
from .endo import (
    verify_generator_duality,
    verify_good_module,
    verify_page,
    verify_takeuchi,
)
from .errors import CapExceeded, InputError, ModlatError, PreconditionError
from .kernels import BACKEND, active as K
from .lattice import (
    is_coindependent,
    is_small_mask,
    refine_coindependent_fg,
    submodule_lattice,
)
from .ringclass import (
    element_d_function,
    is_semiregular_by_weak_supplements,
    jacobson_radical,
    regular_cached,
    units,
    verify_lemma_ra_rb,
)
from .supplements import (
    find_weak_supplement,
    free_cover_decomposition,
    is_semilocal_module,
    is_weakly_supplemented,
    push_forward_weak_supplement,
    pull_back_weak_supplement,
    semisimple_quotient_decomposition,
    verify_free_cover,
    verify_weak_supplement,
    weak_supplement_from_summands,
)

SCHEMA = "modlat-report/1"

THEOREM_IDS = (
    "thm-1.4",
    "thm-1.5",
    "lem-1.2",
    "rem-1.6",
    "prop-2.2",
    "prop-2.5",
    "cor-2.6",
    "lem-2.7",
    "prop-2.8",
    "thm-2.10",
    "thm-3.1",
    "cor-3.2",
    "lem-3.4",
    "thm-3.5",
    "cor-3.7",
    "thm-3.9",
    "prop-3.13",
    "prop-3.14",
    "thm-3.15",
    "good-module",
    "goldens",
)

_ALIAS_PREFIXES = {
    "theorem-": "thm-",
    "lemma-": "lem-",
    "proposition-": "prop-",
    "corollary-": "cor-",
    "remark-": "rem-",
}


def normalize_theorem_id(raw: str) -> str:
    t = raw.strip().lower()
    for long, short in _ALIAS_PREFIXES.items():
        if t.startswith(long):
            t = short + t[len(long):]
            break
    if t not in THEOREM_IDS:
        raise InputError(f"unknown check id {raw!r}; known: {', '.join(THEOREM_IDS)}")
    return t


@dataclass(eq=False)
class CorpusEntry:
    """One ring plus its standard module family, all as rebuildable specs."""

    name: str
    ring_spec: dict
    module_specs: tuple[tuple[str, dict], ...]  # (module id, spec)
    goldens: dict = field(default_factory=dict)
    tags: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ring": self.ring_spec,
            "modules": [{"id": mid, "spec": spec} for mid, spec in self.module_specs],
            "goldens": self.goldens,
            "tags": list(self.tags),
        }

    @staticmethod
    def from_dict(data: dict) -> "CorpusEntry":
        if "ring" not in data:
            raise InputError("corpus entry needs a 'ring' spec")
        name = data.get("name") or "entry"
        ring_spec = data["ring"]
        mods = data.get("modules")
        if mods is None:
            module_specs = standard_module_family(ring_spec)
        else:
            module_specs = tuple((m["id"], m["spec"]) for m in mods)
        return CorpusEntry(
            name=name,
            ring_spec=ring_spec,
            module_specs=module_specs,
            goldens=data.get("goldens", {}),
            tags=tuple(data.get("tags", ())),
        )


def standard_module_family(ring_spec: dict, caps: Caps | None = None) -> tuple[tuple[str, dict], ...]:
    """Regular left/right, quotients by each cyclic submodule, and direct
    sums of two quotients (within the corpus sum-order cap)."""
    caps = caps or active_caps()
    R = ring_from_spec(ring_spec, caps)
    reg = regular_cached(R, "left")
    handle = reg.handle()
    seen = {}
    for x in range(R.order):
        mask = K.cyclic_mask(handle, x)
        seen.setdefault(mask, x)
    cyclic_gens = [seen[mask] for mask in sorted(seen, key=lambda m: (m.bit_count(), m))]
    regular_left = {"kind": "regular", "side": "left"}
    out: list[tuple[str, dict]] = [
        ("regular-left", regular_left),
        ("regular-right", {"kind": "regular", "side": "right"}),
    ]
    quot_ids = []
    quot_orders = {}
    for g in cyclic_gens:
        mid = f"quot{g}"
        out.append((mid, {"kind": "quotient", "of": regular_left, "by": [g]}))
        quot_ids.append(mid)
        quot_orders[mid] = R.order // K.cyclic_mask(handle, g).bit_count()
    for i, a in enumerate(quot_ids):
        for b in quot_ids[i:]:
            if quot_orders[a] * quot_orders[b] > caps.max_sum_order:
                continue
            spec = {
                "kind": "direct_sum",
                "parts": [
                    {"kind": "quotient", "of": regular_left, "by": [int(a[4:])]},
                    {"kind": "quotient", "of": regular_left, "by": [int(b[4:])]},
                ],
            }
            out.append((f"sum({a},{b})", spec))
    return tuple(out)


def builtin_corpus(caps: Caps | None = None) -> list[CorpusEntry]:
    caps = caps or active_caps()
    defs = [
        ("cyclic(1)", {"kind": "cyclic", "n": 1}, {"hdim_left": 0, "length_left": 0}, ("commutative", "zero-ring")),
        ("cyclic(2)", {"kind": "cyclic", "n": 2}, {"hdim_left": 1, "local": True}, ("commutative", "field")),
        ("cyclic(3)", {"kind": "cyclic", "n": 3}, {"hdim_left": 1, "local": True}, ("commutative", "field")),
        ("cyclic(4)", {"kind": "cyclic", "n": 4}, {"hdim_left": 1, "local": True}, ("commutative", "local")),
        ("cyclic(6)", {"kind": "cyclic", "n": 6}, {"hdim_left": 2, "local": False}, ("commutative",)),
        ("cyclic(8)", {"kind": "cyclic", "n": 8}, {"hdim_left": 1, "local": True}, ("commutative", "local")),
        ("cyclic(9)", {"kind": "cyclic", "n": 9}, {"hdim_left": 1, "local": True}, ("commutative", "local")),
        (
            "cyclic(12)",
            {"kind": "cyclic", "n": 12},
            {
                "hdim_left": 2,
                "hdim_right": 2,
                "length_left": 3,
                "jacobson": [0, 6],
                "units": [1, 5, 7, 11],
                "local": False,
            },
            ("commutative",),
        ),
        (
            "matrix(cyclic(2),2)",
            {"kind": "matrix", "base": {"kind": "cyclic", "n": 2}, "size": 2},
            {"hdim_left": 2, "hdim_right": 2, "jacobson": [0], "length_left": 2},
            ("noncommutative", "semisimple"),
        ),
        (
            "triangular(cyclic(2),2)",
            {"kind": "triangular", "base": {"kind": "cyclic", "n": 2}, "size": 2},
            {"hdim_left": 2, "hdim_right": 2, "jacobson": [0, 2], "length_left": 3},
            ("noncommutative",),
        ),
        (
            "triangular(cyclic(3),2)",
            {"kind": "triangular", "base": {"kind": "cyclic", "n": 3}, "size": 2},
            {"hdim_left": 2, "hdim_right": 2},
            ("noncommutative",),
        ),
        (
            "product(cyclic(2),cyclic(3))",
            {"kind": "product", "factors": [{"kind": "cyclic", "n": 2}, {"kind": "cyclic", "n": 3}]},
            {"hdim_left": 2, "local": False},
            ("commutative",),
        ),
    ]
    return [
        CorpusEntry(
            name=name,
            ring_spec=spec,
            module_specs=standard_module_family(spec, caps),
            goldens=goldens,
            tags=tags,
        )
        for name, spec, goldens, tags in defs
    ]


def load_corpus_dir(path) -> list[CorpusEntry]:
    import pathlib

    entries = []
    for fp in sorted(pathlib.Path(path).glob("*.json")):
        with open(fp) as fh:
            data = json.load(fh)
        entry = CorpusEntry.from_dict(data)
        if entry.name == "entry":
            entry.name = fp.stem
        entries.append(entry)
    if not entries:
        raise InputError(f"no corpus entries found in {path}")
    return entries


# ---------------------------------------------------------------------------
# entry context: lazily built, cached per worker process


class EntryContext:
    def __init__(self, entry: CorpusEntry, caps: Caps):
        self.entry = entry
        self.caps = caps
        self._ring = None
        self._modules: dict[str, FiniteModule] = {}
        self.spec_by_id = dict(entry.module_specs)

    @property
    def ring(self):
        if self._ring is None:
            self._ring = ring_from_spec(self.entry.ring_spec, self.caps)
        return self._ring

    def module(self, module_id: str) -> FiniteModule:
        if module_id not in self._modules:
            if module_id == "regular-left":
                mod = regular_cached(self.ring, "left")
            elif module_id == "regular-right":
                mod = regular_cached(self.ring, "right")
            else:
                mod = module_from_spec(self.ring, self.spec_by_id[module_id], self.caps)
            mod.name = f"{self.entry.name}/{module_id}"
            self._modules[module_id] = mod
        return self._modules[module_id]

    def module_ids(self) -> list[str]:
        return [mid for mid, _ in self.entry.module_specs]

    def left_module_ids(self) -> list[str]:
        return [mid for mid, spec in self.entry.module_specs if spec.get("side", "left") == "left"]


_CTX_CACHE: dict[str, EntryContext] = {}


def _context_for(entry_data: dict, caps: Caps) -> EntryContext:
    key = json.dumps(entry_data, sort_keys=True)
    ctx = _CTX_CACHE.get(key)
    if ctx is None:
        ctx = EntryContext(CorpusEntry.from_dict(entry_data), caps)
        _CTX_CACHE[key] = ctx
    return ctx


# ---------------------------------------------------------------------------
# helpers shared by verifiers


def _members(M: FiniteModule, mask: int) -> list[int]:
    return sorted(Submodule(M, mask).members())


def _strided(seq, limit: int):
    if len(seq) <= limit:
        return list(seq)
    stride = -(-len(seq) // limit)
    return list(seq)[::stride]


def _pairs(masks, limit: int):
    all_pairs = [(a, b) for i, a in enumerate(masks) for b in masks[i:]]
    return _strided(all_pairs, limit)


def _skip(reason: str):
    return ("skip", reason, None)


def _fail(detail: str, witness=None):
    return ("fail", detail, witness)


def _ok(detail: str, witness=None):
    return ("pass", detail, witness)


# ---------------------------------------------------------------------------
# verifiers: (ctx, payload) -> (status, detail, witness)


def _v_thm_1_4(ctx, payload):
    M = ctx.module(payload["module"])
    lat = submodule_lattice(M)
    n, decomp = hollow_dimension(M)  # routes A, B, C agree or raise
    # descending-chain stabilization: some tail index n0 has K_n0/K_m small
    # in M/K_m for every later m, along the canonical maximal chain
    chain = []
    cur = lat.full_mask
    while cur != lat.zero_mask:
        downs = [m for m in lat.node_masks if m != cur and m | cur == cur]
        covers = [m for m in downs if not any(o != m and o != cur and m | o == o and o | cur == cur for o in downs)]
        cur = covers[-1]
        chain.append(cur)
    stable_at = None
    for i in range(len(chain)):
        ok = True
        for j in range(i, len(chain)):
            Q, proj = quotient_module(M, Submodule(M, chain[j]))
            if not is_small_mask(submodule_lattice(Q), proj.map_mask(chain[i])):
                ok = False
                break
        if ok:
            stable_at = i
            break
    if stable_at is None and chain:
        return _fail("no stabilization index along the canonical descending chain")
    witness = {
        "hdim": n,
        "family": [_members(M, s.mask) for s in decomp.family],
        "intersection": _members(M, decomp.intersection.mask),
        "chain_stable_at": stable_at,
    }
    return _ok(f"hdim={n} via decomposition/max-family/radical-length", witness)


def _v_thm_1_5(ctx, payload):
    from .dimension import verify_d_axioms

    M = ctx.module(payload["module"])
    failure = verify_d_axioms(M)
    if failure is not None:
        return _fail(f"{failure.kind}: {failure.detail}")
    lat = submodule_lattice(M)
    return _ok(f"d axioms hold over {len(lat)} submodules")


def _v_lem_1_2(ctx, payload):
    M = ctx.module(payload["module"])
    _, decomp = hollow_dimension(M)
    family = list(decomp.family)
    refined = refine_coindependent_fg(M, family)
    if len(refined) != len(family):
        return _fail("refinement changed the family size")
    for (sub, gens), parent in zip(refined, family):
        if sub.mask | parent.mask != parent.mask:
            return _fail("refined member is not inside its parent")
        from .core import generated_mask

        if generated_mask(M, gens) != sub.mask:
            return _fail("stored generators do not generate the refined member")
    if not is_coindependent(M, [s for s, _ in refined]):
        return _fail("refined family is not coindependent")
    witness = {
        "family": [_members(M, s.mask) for s in family],
        "refined": [{"members": _members(M, s.mask), "gens": list(g)} for s, g in refined],
    }
    return _ok(f"refined {len(family)} members to finitely generated ones", witness)


def _v_rem_1_6(ctx, payload):
    M = ctx.module(payload["module"])
    lat = submodule_lattice(M)
    d = d_values(M)
    hdim_m = d[lat.zero_mask]
    for mask, val in d.items():
        if val > hdim_m:
            return _fail(f"quotient dimension {val} exceeds hdim {hdim_m} at {mask:#x}")
    small = [m for m in lat.node_masks if is_small_mask(lat, m)]
    for mask in small:
        if d[mask] != hdim_m:
            return _fail(f"small submodule {mask:#x} changes hdim: {d[mask]} != {hdim_m}")
    detail = f"monotone over {len(d)} quotients; invariant under {len(small)} small submodules"
    if M.parts is not None and len(M.parts) == 2:
        a, b = M.parts
        ha, hb = hollow_dimension(a)[0], hollow_dimension(b)[0]
        ua, ub = uniform_dimension(a)[0], uniform_dimension(b)[0]
        hm, um = hollow_dimension(M)[0], uniform_dimension(M)[0]
        if hm != ha + hb:
            return _fail(f"hdim not additive: {hm} != {ha}+{hb}")
        if um != ua + ub:
            return _fail(f"udim not additive: {um} != {ua}+{ub}")
        detail += f"; additive: hdim {ha}+{hb}={hm}, udim {ua}+{ub}={um}"
    return _ok(detail)


def _v_prop_2_2(ctx, payload):
    M = ctx.module(payload["module"])
    lat = submodule_lattice(M)
    masks = lat.node_masks
    outer = _strided(masks, max(1, ctx.caps.sampled_pairs // max(len(masks), 1)))
    full = lat.full_mask
    decomposed = 0
    for n_mask in outer:
        Q, _ = quotient_module(M, Submodule(M, n_mask))
        ss = is_semisimple(Q)
        holds = True
        for l_mask in masks:
            if not any(
                lat.join_masks(l_mask, k_mask) == full and (l_mask & k_mask) | n_mask == n_mask
                for k_mask in masks
            ):
                holds = False
                break
        if ss != holds:
            return _fail(
                f"equivalence fails at {n_mask:#x}: semisimple-quotient={ss}, pair-property={holds}"
            )
        if ss and n_mask != full:
            semisimple_quotient_decomposition(M, Submodule(M, n_mask))
            decomposed += 1
    return _ok(f"equivalence on {len(outer)} submodules; {decomposed} decompositions verified")


def _v_prop_2_5(ctx, payload):
    M = ctx.module(payload["module"])
    lat = submodule_lattice(M)
    ws, _ = is_weakly_supplemented(M)
    if not ws:
        return _fail("module is not weakly supplemented")
    if not is_semilocal_module(M):
        return _fail("weakly supplemented but not semilocal")
    budget = max(4, ctx.caps.sampled_pairs // max(len(lat), 1))
    transfers = 0
    for n_mask in _strided(lat.node_masks, budget):
        Q, proj = quotient_module(M, Submodule(M, n_mask))
        qlat = submodule_lattice(Q)
        for k_mask in _strided(qlat.node_masks, 4):
            pre = proj.preimage_mask(k_mask)
            w = find_weak_supplement(M, Submodule(M, pre))
            push_forward_weak_supplement(proj, Submodule(Q, k_mask), w.supplement)
            transfers += 1
    pulls = 0
    for n_mask in [m for m in lat.node_masks if is_small_mask(lat, m)][:4]:
        Q, proj = quotient_module(M, Submodule(M, n_mask))
        qlat = submodule_lattice(Q)
        for l_mask in _strided(lat.node_masks, 4):
            x = find_weak_supplement(Q, Submodule(Q, proj.map_mask(l_mask)))
            pull_back_weak_supplement(proj, x.supplement, Submodule(M, l_mask))
            pulls += 1
    summands = 0
    from .core import submodule_as_module

    zero = lat.zero_mask
    direct_pairs = [
        (a, b)
        for i, a in enumerate(lat.node_masks)
        for b in lat.node_masks[i:]
        if (a & b) == zero and lat.join_masks(a, b) == lat.full_mask
    ]
    for a, b in _strided(direct_pairs, 4):
        for part in (a, b):
            S, _ = submodule_as_module(M, part)
            ok, _ = is_weakly_supplemented(S)
            if not ok:
                return _fail(f"direct summand {part:#x} is not weakly supplemented")
            summands += 1
    return _ok(
        f"weakly supplemented; semilocal; {transfers} push-forwards, {pulls} pull-backs, "
        f"{summands} summand checks verified"
    )


def _v_cor_2_6(ctx, payload):
    M = ctx.module(payload["module"])
    if radical(M).mask != (1 << M.zero):
        return _skip("radical nonzero; statement is about radical-free modules")
    if not is_semisimple(M):
        return _fail("radical-free module is not semisimple")
    h = hollow_dimension(M)[0]
    ln = length(M)
    if h != ln:
        return _fail(f"hdim {h} != length {ln}")
    return _ok(f"semisimple with hdim = length = {h}")


def _v_lem_2_7(ctx, payload):
    M = ctx.module(payload["module"])
    lat = submodule_lattice(M)
    count = 0
    for m1_mask, k_mask in _pairs(lat.node_masks, ctx.caps.sampled_pairs // 8 or 8):
        m1k = lat.join_masks(m1_mask, k_mask)
        n = find_weak_supplement(M, Submodule(M, m1k))
        weak_supplement_from_summands(
            M, Submodule(M, m1_mask), Submodule(M, k_mask), n.supplement
        )
        count += 1
    return _ok(f"{count} constructions verified from scratch")


def _v_prop_2_8(ctx, payload):
    M = ctx.module(payload["module"])
    lat = submodule_lattice(M)
    full = lat.full_mask
    zero_sub = Submodule(M, lat.zero_mask)
    decomps = [
        (a, b)
        for i, a in enumerate(lat.node_masks)
        for b in lat.node_masks[i:]
        if lat.join_masks(a, b) == full
    ]
    count = 0
    for m1_mask, m2_mask in _strided(decomps, 8):
        for k_mask in _strided(lat.node_masks, 6):
            m2k = lat.join_masks(m2_mask, k_mask)
            w1 = weak_supplement_from_summands(
                M, Submodule(M, m1_mask), Submodule(M, m2k), zero_sub
            )
            weak_supplement_from_summands(
                M, Submodule(M, m2_mask), Submodule(M, k_mask), w1.supplement
            )
            count += 1
    return _ok(f"{count} two-step constructions verified")


def _v_thm_2_10(ctx, payload):
    M = ctx.module(payload["module"])
    h = hollow_dimension(M)[0]
    ws, _ = is_weakly_supplemented(M)
    sl = is_semilocal_module(M)
    rq, _ = quotient_module(M, radical(M))
    ln = length(rq)
    if not ws:
        return _fail("finite hollow dimension but not weakly supplemented")
    if not sl:
        return _fail("weakly supplemented but not semilocal")
    if h < ln:
        return _fail(f"hdim {h} below radical-quotient length {ln}")
    if h != ln:
        return _fail(f"finitely generated module with hdim {h} != radical-quotient length {ln}")
    return _ok(f"hdim = length(M/Rad M) = {h}; weakly supplemented; semilocal")


def _v_thm_3_1(ctx, payload):
    M = ctx.module(payload["module"])
    if not is_semilocal_module(M):
        return _fail("base module is not semilocal")
    if M.order * M.order > ctx.caps.max_sum_order:
        return _skip(f"M^2 would have {M.order * M.order} elements")
    M2 = direct_sum([M, M], ring=ctx.ring, side=M.side)
    lat = submodule_lattice(M2)
    checked = 0
    for mask in _strided(lat.node_masks, ctx.caps.sampled_pairs):
        Q, _ = quotient_module(M2, Submodule(M2, mask))
        if not is_semilocal_module(Q):
            return _fail(f"quotient of M^2 by {mask:#x} is not semilocal")
        checked += 1
    return _ok(f"{checked} quotients of M^2 are semilocal")


def _v_cor_3_2(ctx, payload):
    R = ctx.ring
    left = regular_cached(R, "left")
    right = regular_cached(R, "right")
    hl = hollow_dimension(left)[0]
    hr = hollow_dimension(right)[0]
    jac = jacobson_radical(R)
    ql, _ = quotient_module(left, jac)
    qr, _ = quotient_module(right, Submodule(right, jac.mask))
    ll, lr = length(ql), length(qr)
    if not (hl == ll == lr == hr):
        return _fail(f"chain broken: hdim_left={hl}, len_left={ll}, len_right={lr}, hdim_right={hr}")
    witness = {"hdim_left": hl, "hdim_right": hr, "quotient_length": ll, "jacobson": _members(left, jac.mask)}
    return _ok(f"hdim_left = length(R/J) = hdim_right = {hl}", witness)


def _v_lem_3_4(ctx, payload):
    R = ctx.ring
    counter = verify_lemma_ra_rb(R)
    if counter is not None:
        return _fail(f"identity fails at (r, a) = {counter}")
    return _ok(f"{R.order * R.order} pairs checked")


def _v_thm_3_5(ctx, payload):
    R = ctx.ring
    rep = element_d_function(R)
    if rep.unit_axiom_failure:
        return _fail(f"d(a)=0 for non-unit a={rep.unit_axiom_failure[0]}")
    if rep.additivity_failure:
        return _fail(f"additivity fails at (a, b)={rep.additivity_failure[:2]}")
    if rep.order_failure:
        return _fail(f"strict increase fails at (a, b)={rep.order_failure[:2]}")
    ss_ids = []
    for mid in ctx.left_module_ids():
        if len(ss_ids) >= 4:
            break
        if is_semisimple(ctx.module(mid)):
            ss_ids.append(mid)
    sums = 0
    for i, a in enumerate(ss_ids):
        for b in ss_ids[i:]:
            ma, mb = ctx.module(a), ctx.module(b)
            if ma.order * mb.order > ctx.caps.max_elements:
                continue
            if not is_semisimple(direct_sum([ma, mb], ring=R)):
                return _fail(f"direct sum of semisimple modules {a}, {b} not semisimple")
            sums += 1
    detail = f"element d-function axioms on {R.order}^2 pairs; {sums} semisimple sums"
    return _ok(detail, {"d": [rep.d[a] for a in range(R.order)]})


def _v_cor_3_7(ctx, payload):
    M = ctx.module(payload["module"])
    R = ctx.ring
    from .core import greedy_generators

    k = len(greedy_generators(M))
    if R.order**max(k, 1) > ctx.caps.max_sum_order:
        return _skip(f"free cover R^{k} with {R.order ** k} elements exceeds the sum-order cap")
    cert = free_cover_decomposition(R, M)
    reason = verify_free_cover(cert)
    if reason is not None:
        return _fail(reason)
    witness = {
        "rank": cert.rank,
        "generators": list(cert.generators),
        "kernel_size": len(cert.kernel),
        "supplement_size": len(cert.supplement),
        "overlap": _members(cert.free, cert.overlap.mask),
    }
    return _ok(f"R^{cert.rank} covers with small split kernel", witness)


def _v_thm_3_9(ctx, payload):
    M = ctx.module(payload["module"])
    rep = verify_takeuchi(M, ctx.caps)
    if rep.status == "skipped":
        witness = rep.to_dict() if rep.witness is not None else None
        return ("skip", rep.reason, witness)
    if rep.status == "failed":
        return _fail(f"hdim(M)={rep.hdim_module} != hdim(End)={rep.hdim_end}")
    detail = f"hdim(M) = hdim(End(M)) = {rep.hdim_module}"
    if rep.cover_hdim is not None:
        if not rep.cover_ok:
            return _fail("hom-cover inequality fails")
        detail += f"; hom-cover bound {rep.cover_hdim} >= {rep.hdim_module}"
    return _ok(detail, rep.to_dict())


def _v_prop_3_13(ctx, payload):
    R = ctx.ring
    if not is_semiregular_by_weak_supplements(R):
        return _fail("principal ideals without weak supplements")
    return _ok("weak supplements for all principal one-sided ideals; quotient von Neumann regular")


def _v_prop_3_14(ctx, payload):
    M = ctx.module(payload["module"])
    Q = regular_cached(ctx.ring, "left")
    Q.name = f"{ctx.entry.name}/regular-left"
    try:
        rep = verify_page(M, Q, ctx.caps)
    except PreconditionError as exc:
        return _skip(str(exc))
    except CapExceeded as exc:
        return _skip(str(exc))
    if rep.status == "failed":
        return _fail(f"hdim={rep.hdim_module} != udim(Hom)={rep.udim_homs}")
    return _ok(
        f"hdim(M) = udim(Hom(M, Q)) = {rep.hdim_module} over {rep.hom_count} maps",
        rep.to_dict(),
    )


def _v_thm_3_15(ctx, payload):
    rep = verify_generator_duality(ctx.ring, ctx.caps)
    if rep.status == "skipped":
        return _skip(rep.reason)
    if rep.status == "failed":
        return _fail(f"hdim over End = {rep.hdim_over_end} != length {rep.quotient_length}")
    return _ok(f"hdim over End(regular) = length(R/J) = {rep.hdim_over_end}", rep.to_dict())


def _v_good_module(ctx, payload):
    M = ctx.module(payload["module"])
    checked = 0
    skipped = 0
    total_hom = 0
    for target_id in ctx.left_module_ids():
        N = ctx.module(target_id)
        if M.order * N.order > ctx.caps.good_module_pair_product:
            skipped += 1
            continue
        try:
            rep = verify_good_module(M, N, ctx.caps)
        except CapExceeded:
            skipped += 1
            continue
        if not rep.ok:
            return _fail(f"radical image mismatch into {target_id}", rep.to_dict())
        checked += 1
        total_hom += rep.checked
    if checked == 0:
        return _skip("all targets exceed the hom pair cap")
    return _ok(f"radical maps onto radical for {total_hom} maps into {checked} targets ({skipped} capped)")


def _v_goldens(ctx, payload):
    R = ctx.ring
    mismatches = []
    for key, expected in sorted(ctx.entry.goldens.items()):
        if key == "hdim_left":
            got = hollow_dimension(regular_cached(R, "left"))[0]
        elif key == "hdim_right":
            got = hollow_dimension(regular_cached(R, "right"))[0]
        elif key == "length_left":
            got = length(regular_cached(R, "left"))
        elif key == "jacobson":
            got = _members(regular_cached(R, "left"), jacobson_radical(R).mask)
        elif key == "units":
            got = list(units(R))
        elif key == "local":
            got = len(submodule_lattice(regular_cached(R, "left")).maximal_masks) == 1
        else:
            mismatches.append(f"unknown golden key {key!r}")
            continue
        if got != expected:
            mismatches.append(f"{key}: expected {expected}, computed {got}")
    if mismatches:
        return _fail("; ".join(mismatches))
    return _ok(f"{len(ctx.entry.goldens)} golden values match")


VERIFIERS = {
    "thm-1.4": _v_thm_1_4,
    "thm-1.5": _v_thm_1_5,
    "lem-1.2": _v_lem_1_2,
    "rem-1.6": _v_rem_1_6,
    "prop-2.2": _v_prop_2_2,
    "prop-2.5": _v_prop_2_5,
    "cor-2.6": _v_cor_2_6,
    "lem-2.7": _v_lem_2_7,
    "prop-2.8": _v_prop_2_8,
    "thm-2.10": _v_thm_2_10,
    "thm-3.1": _v_thm_3_1,
    "cor-3.2": _v_cor_3_2,
    "lem-3.4": _v_lem_3_4,
    "thm-3.5": _v_thm_3_5,
    "cor-3.7": _v_cor_3_7,
    "thm-3.9": _v_thm_3_9,
    "prop-3.13": _v_prop_3_13,
    "prop-3.14": _v_prop_3_14,
    "thm-3.15": _v_thm_3_15,
    "good-module": _v_good_module,
    "goldens": _v_goldens,
}

_RING_LEVEL = {"cor-3.2", "lem-3.4", "thm-3.5", "prop-3.13", "thm-3.15", "goldens"}
_BASE_MODULE_LEVEL = {"thm-3.1"}
_LEFT_MODULE_LEVEL = {"prop-3.14", "good-module"}


def _instances_for(theorem: str, entry: CorpusEntry) -> list[tuple[str, dict]]:
    module_ids = [mid for mid, _ in entry.module_specs]
    left_ids = [mid for mid, spec in entry.module_specs if spec.get("side", "left") == "left"]
    if theorem in _RING_LEVEL:
        return [("ring", {})]
    if theorem in _BASE_MODULE_LEVEL:
        bases = [m for m in module_ids if not m.startswith("sum(") and m != "regular-right"]
        return [(mid, {"module": mid}) for mid in bases]
    if theorem in _LEFT_MODULE_LEVEL:
        return [(mid, {"module": mid}) for mid in left_ids]
    return [(mid, {"module": mid}) for mid in module_ids]


def verification_tasks(corpus, theorems=None, caps: Caps | None = None) -> list[dict]:
    caps = caps or active_caps()
    if theorems is None:
        selected = list(THEOREM_IDS)
    else:
        selected = [normalize_theorem_id(t) for t in theorems]
    tasks = []
    for entry in corpus:
        entry_data = entry.to_dict()
        for theorem in THEOREM_IDS:
            if theorem not in selected:
                continue
            if theorem == "goldens" and not entry.goldens:
                continue
            for instance_id, payload in _instances_for(theorem, entry):
                tasks.append(
                    {
                        "index": len(tasks),
                        "theorem": theorem,
                        "entry": entry.name,
                        "instance": instance_id,
                        "payload": payload,
                        "entry_data": entry_data,
                        "caps": caps.__dict__,
                    }
                )
    return tasks


def _witness_digest(witness) -> str | None:
    if witness is None:
        return None
    encoded = json.dumps(witness, sort_keys=True, separators=(",", ":"), default=str)
    return hashlib.sha256(encoded.encode()).hexdigest()[:16]


def _run_task(task: dict) -> dict:
    caps = Caps(**task["caps"])
    started = time.perf_counter()
    try:
        ctx = _context_for(task["entry_data"], caps)
        verifier = VERIFIERS[task["theorem"]]
        status, detail, witness = verifier(ctx, task["payload"])
    except ModlatError as exc:
        status, detail, witness = "error", f"{type(exc).__name__}: {exc}", None
    elapsed_ms = round((time.perf_counter() - started) * 1000.0, 3)
    return {
        "index": task["index"],
        "theorem": task["theorem"],
        "instance": f"{task['entry']}/{task['instance']}",
        "status": status,
        "detail": detail,
        "witness_digest": _witness_digest(witness),
        "elapsed_ms": elapsed_ms,
    }


def run_verification(corpus=None, theorems=None, jobs: int = 1, caps: Caps | None = None) -> dict:
    """Run the selected checks over the corpus; deterministic report body."""
    caps = caps or active_caps()
    if corpus is None:
        corpus = builtin_corpus(caps)
    tasks = verification_tasks(corpus, theorems, caps)
    started = time.perf_counter()
    if jobs <= 1:
        results = [_run_task(t) for t in tasks]
    else:
        # large chunks keep one entry's tasks on one worker, so per-process
        # lattice caches get reused; result order is restored by index below
        chunk = max(2, -(-len(tasks) // (jobs * 6)))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks, chunksize=chunk))
    results.sort(key=lambda r: r["index"])
    for r in results:
        r.pop("index")
    counts = {"pass": 0, "fail": 0, "skip": 0, "error": 0}
    for r in results:
        counts[r["status"]] += 1
    report = {
        "schema": SCHEMA,
        "tool": {"name": "modlat", "version": __version__, "backend": BACKEND},
        "caps": dict(sorted(caps.__dict__.items())),
        "theorems": sorted({t["theorem"] for t in tasks}),
        "entries": [e.name for e in corpus],
        "results": results,
        "summary": counts,
        "run": {
            "jobs": jobs,
            "elapsed_ms": round((time.perf_counter() - started) * 1000.0, 3),
        },
    }
    return report


def report_body(report: dict) -> str:
    """Canonical JSON of a report with all timing/run fields stripped."""
    trimmed = {k: v for k, v in report.items() if k != "run"}
    trimmed["results"] = [
        {k: v for k, v in r.items() if k != "elapsed_ms"} for r in report["results"]
    ]
    return json.dumps(trimmed, sort_keys=True, indent=1)


def report_ok(report: dict) -> bool:
    return report["summary"]["fail"] == 0 and report["summary"]["error"] == 0
