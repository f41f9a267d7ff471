"""Submodule lattices and the order-theoretic predicates built on them.

Canonical node order is ascending (cardinality, bitmask value); the zero
submodule is node 0 and the full module is the last node. Every
"least canonical" tie-break in the package refers to this order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .config import active_caps
from .core import FiniteModule, Submodule, generated_mask
from .errors import InternalCheckError, PreconditionError
from .kernels import active as K


@dataclass(eq=False)
class SubmoduleLattice:
    """The complete lattice of submodules of one finite module."""

    module: FiniteModule
    node_masks: tuple[int, ...]

    def __post_init__(self):
        self._index = {m: i for i, m in enumerate(self.node_masks)}
        self._join = {}
        self.full_mask = self.module.full_mask()
        self.zero_mask = 1 << self.module.zero
        self._maximal = None
        self._minimal = None
        self._radical = None
        self._socle = None
        self._covers = None
        self._small_cache = {}
        self._essential_cache = {}
        self._within_cache = {}
        self._rad_within = {}
        self._soc_within = {}

    def __len__(self):
        return len(self.node_masks)

    def node(self, i: int) -> Submodule:
        return Submodule(self.module, self.node_masks[i])

    def nodes(self):
        return [Submodule(self.module, m) for m in self.node_masks]

    def index_of(self, mask: int) -> int:
        try:
            return self._index[mask]
        except KeyError:
            raise PreconditionError(f"mask {mask:#x} is not a submodule of {self.module.name}") from None

    def is_node(self, mask: int) -> bool:
        return mask in self._index

    def join_masks(self, a: int, b: int) -> int:
        if a == b or (a | b) == b:
            return b
        if (a | b) == a:
            return a
        key = (a, b) if a < b else (b, a)
        out = self._join.get(key)
        if out is None:
            out = K.sum_mask(self.module.handle(), a, b)
            self._join[key] = out
        return out

    @staticmethod
    def meet_masks(a: int, b: int) -> int:
        # intersection of submodules is a submodule, so this stays in the node set
        return a & b

    def nodes_by_count(self) -> dict[int, list[int]]:
        """Node masks grouped by cardinality, canonical order within groups."""
        out = getattr(self, "_by_count", None)
        if out is None:
            out = {}
            for m in self.node_masks:
                out.setdefault(m.bit_count(), []).append(m)
            self._by_count = out
        return out

    @property
    def maximal_masks(self) -> tuple[int, ...]:
        """Masks of the maximal proper submodules, canonical order."""
        if self._maximal is None:
            proper = [m for m in self.node_masks if m != self.full_mask]
            out = []
            for m in proper:
                if not any(o != m and m | o == o for o in proper):
                    out.append(m)
            self._maximal = tuple(out)
        return self._maximal

    @property
    def minimal_masks(self) -> tuple[int, ...]:
        """Masks of the minimal nonzero submodules, canonical order."""
        if self._minimal is None:
            nonzero = [m for m in self.node_masks if m != self.zero_mask]
            out = []
            for m in nonzero:
                if not any(o != m and o | m == m for o in nonzero):
                    out.append(m)
            self._minimal = tuple(out)
        return self._minimal

    def radical_mask(self) -> int:
        """Meet of all maximal submodules; the full module when none exist."""
        if self._radical is None:
            out = self.full_mask
            for m in self.maximal_masks:
                out &= m
            self._radical = out
        return self._radical

    def socle_mask(self) -> int:
        """Join of all minimal nonzero submodules; zero when none exist."""
        if self._socle is None:
            out = self.zero_mask
            for m in self.minimal_masks:
                out = self.join_masks(out, m)
            self._socle = out
        return self._socle

    # --- relative (interval) variants: submodules of a submodule W are
    # exactly the nodes contained in W, so every predicate localizes.

    def masks_within(self, within: int) -> list[int]:
        out = self._within_cache.get(within)
        if out is None:
            out = [m for m in self.node_masks if m | within == within]
            self._within_cache[within] = out
        return out

    def maximal_within(self, within: int) -> list[int]:
        proper = [m for m in self.masks_within(within) if m != within]
        return [m for m in proper if not any(o != m and m | o == o for o in proper)]

    def minimal_within(self, within: int) -> list[int]:
        nz = [m for m in self.masks_within(within) if m != self.zero_mask]
        return [m for m in nz if not any(o != m and o | m == m for o in nz)]

    def radical_within(self, within: int) -> int:
        out = self._rad_within.get(within)
        if out is None:
            out = within
            for m in self.maximal_within(within):
                out &= m
            self._rad_within[within] = out
        return out

    def socle_within(self, within: int) -> int:
        out = self._soc_within.get(within)
        if out is None:
            out = self.zero_mask
            for m in self.minimal_within(within):
                out = self.join_masks(out, m)
            self._soc_within[within] = out
        return out

    def covers(self) -> list[tuple[int, int]]:
        """Covering pairs (lower node id, upper node id) of the Hasse diagram."""
        if self._covers is None:
            masks = self.node_masks
            out = []
            for i, lo in enumerate(masks):
                ups = [j for j, hi in enumerate(masks) if hi != lo and lo | hi == hi]
                for j in ups:
                    hi = masks[j]
                    if not any(
                        masks[t] != lo and masks[t] != hi and lo | masks[t] == masks[t] and masks[t] | hi == hi
                        for t in ups
                    ):
                        out.append((i, j))
            self._covers = out
        return self._covers

    def to_dot(self) -> str:
        """Hasse diagram in DOT form; labels are cardinality:least-member."""
        lines = [
            "digraph submodule_lattice {",
            f'  label="{self.module.name}";',
            "  rankdir=BT;",
            '  node [shape=box, fontsize=10];',
        ]
        for i, mask in enumerate(self.node_masks):
            least = (mask & -mask).bit_length() - 1
            lines.append(f'  n{i} [label="{mask.bit_count()}:{least}"];')
        for lo, hi in self.covers():
            lines.append(f"  n{lo} -> n{hi};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def submodule_lattice(M: FiniteModule, caps=None) -> SubmoduleLattice:
    """Full submodule lattice, cached on the module."""
    if M._lattice is None:
        caps = caps or active_caps()
        masks = K.all_submodule_masks(M.handle(), caps.max_lattice_nodes)
        M._lattice = SubmoduleLattice(M, tuple(masks))
    return M._lattice


def generated_submodule(M: FiniteModule, gens) -> Submodule:
    """Least submodule containing the given element indices."""
    return Submodule(M, generated_mask(M, gens))


def _require_same_module(N: Submodule, M: FiniteModule | None) -> FiniteModule:
    if M is not None and N.module is not M:
        raise PreconditionError("submodule does not belong to the given module")
    return N.module


def is_small_mask(lat: SubmoduleLattice, n_mask: int, within: int | None = None) -> bool:
    """Definitional smallness plus the radical criterion; both must agree."""
    if within is None:
        within = lat.full_mask
    key = (n_mask, within)
    cached = lat._small_cache.get(key)
    if cached is not None:
        return cached
    by_def = True
    for m in lat.masks_within(within):
        if m != within and lat.join_masks(n_mask, m) == within:
            by_def = False
            break
    by_rad = (n_mask | lat.radical_within(within)) == lat.radical_within(within)
    if by_def != by_rad:
        raise InternalCheckError(
            f"smallness routes disagree on {lat.module.name}: definitional={by_def}, radical={by_rad}"
        )
    lat._small_cache[key] = by_def
    return by_def


def is_essential_mask(lat: SubmoduleLattice, n_mask: int, within: int | None = None) -> bool:
    """Definitional essentiality plus the socle criterion; both must agree."""
    if within is None:
        within = lat.full_mask
    key = (n_mask, within)
    cached = lat._essential_cache.get(key)
    if cached is not None:
        return cached
    zero = lat.zero_mask
    by_def = True
    for m in lat.masks_within(within):
        if m != zero and (n_mask & m) == zero:
            by_def = False
            break
    soc = lat.socle_within(within)
    by_soc = (soc | n_mask) == n_mask
    if by_def != by_soc:
        raise InternalCheckError(
            f"essentiality routes disagree on {lat.module.name}: definitional={by_def}, socle={by_soc}"
        )
    lat._essential_cache[key] = by_def
    return by_def


def is_small(N: Submodule, M: FiniteModule | None = None) -> bool:
    """True iff N + L = M forces L = M for every submodule L."""
    M = _require_same_module(N, M)
    return is_small_mask(submodule_lattice(M), N.mask)


def is_essential(N: Submodule, M: FiniteModule | None = None) -> bool:
    """True iff N meets every nonzero submodule nontrivially."""
    M = _require_same_module(N, M)
    return is_essential_mask(submodule_lattice(M), N.mask)


def complement_of(N: Submodule, M: FiniteModule | None = None) -> Submodule:
    """A submodule maximal with trivial intersection with N, least canonical."""
    M = _require_same_module(N, M)
    lat = submodule_lattice(M)
    zero = lat.zero_mask
    candidates = [m for m in lat.node_masks if (m & N.mask) == zero]
    maximal = [
        m for m in candidates if not any(o != m and m | o == o for o in candidates)
    ]
    return Submodule(M, maximal[0])


def coindependence_failure(M: FiniteModule, family, full: bool | None = None):
    """None when the family is coindependent, else (member index, reason).

    Fast mode checks each member against the meet of all the others, which
    is the binding case: shrinking the index set only enlarges the meet.
    Full mode (audit) quantifies over every subset of the other indices.
    """
    caps = active_caps()
    if full is None:
        full = caps.coindependent_full
    lat = submodule_lattice(M)
    masks = [f.mask if isinstance(f, Submodule) else f for f in family]
    for i, m in enumerate(masks):
        if m == lat.full_mask:
            return (i, "member is not a proper submodule")
    k = len(masks)
    if k == 0:
        return None
    if full:
        for i in range(k):
            others = [masks[j] for j in range(k) if j != i]
            for size in range(len(others) + 1):
                for combo in itertools.combinations(range(len(others)), size):
                    meet = lat.full_mask
                    for j in combo:
                        meet &= others[j]
                    if lat.join_masks(masks[i], meet) != lat.full_mask:
                        return (i, f"sum with meet of subset {combo} is proper")
        return None
    # prefix/suffix meets give each "all the others" meet in O(k)
    prefix = [lat.full_mask] * (k + 1)
    for i in range(k):
        prefix[i + 1] = prefix[i] & masks[i]
    suffix = [lat.full_mask] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] & masks[i]
    for i in range(k):
        meet_others = prefix[i] & suffix[i + 1]
        if lat.join_masks(masks[i], meet_others) != lat.full_mask:
            return (i, "sum with meet of the other members is proper")
    return None


def is_coindependent(M: FiniteModule, family, full: bool | None = None) -> bool:
    """True iff each member plus the meet of any others is the whole module."""
    return coindependence_failure(M, family, full) is None


def refine_coindependent_fg(M: FiniteModule, family):
    """Shrink a coindependent family to one with explicit finite generating sets.

    For each member N_i, greedily picks a minimal-count generator set from
    N_i and the meet D_i of the other members whose spans X_i <= N_i and
    Y_i <= D_i satisfy X_i + Y_i = M, then returns L_i = X_i + sum of the
    other Y_j with its combined generating set. The output family is
    coindependent with L_i <= N_i, and is re-checked before returning.
    """
    failure = coindependence_failure(M, family)
    if failure is not None:
        raise PreconditionError(f"family is not coindependent: member {failure[0]}: {failure[1]}")
    masks = [f.mask if isinstance(f, Submodule) else f for f in family]
    k = len(masks)
    if k == 0:
        return []
    handle = M.handle()
    full = M.full_mask()
    zero = 1 << M.zero
    x_gens = []
    y_gens = []
    for i in range(k):
        d_mask = full
        for j in range(k):
            if j != i:
                d_mask &= masks[j]
        pool = masks[i] | d_mask
        cur = zero
        gens = []
        while cur != full:
            best_x = -1
            best_mask = 0
            best_gain = -1
            probe = pool & ~cur
            while probe:
                low = probe & -probe
                x = low.bit_length() - 1
                probe ^= low
                grown = K.sum_mask(handle, cur, K.cyclic_mask(handle, x))
                gain = grown.bit_count()
                if gain > best_gain:
                    best_x, best_mask, best_gain = x, grown, gain
            if best_x < 0:
                raise InternalCheckError("generator pool does not span the module")
            gens.append(best_x)
            cur = best_mask
        x_gens.append(tuple(g for g in gens if (masks[i] >> g) & 1))
        y_gens.append(tuple(g for g in gens if not (masks[i] >> g) & 1))
    out = []
    for i in range(k):
        combined = list(x_gens[i])
        for j in range(k):
            if j != i:
                combined.extend(y_gens[j])
        combined = tuple(sorted(set(combined)))
        l_mask = K.closure_mask(handle, sum(1 << g for g in combined))
        if l_mask | masks[i] != masks[i]:
            raise InternalCheckError("refined member escapes its parent submodule")
        out.append((Submodule(M, l_mask), combined))
    failure = coindependence_failure(M, [s for s, _ in out])
    if failure is not None:
        raise InternalCheckError(f"refined family lost coindependence: {failure}")
    return out


def modularity_violation(lat: SubmoduleLattice, sample_cap: int | None = None):
    """First sampled triple A <= C with A + (B ^ C) != (A + B) ^ C, if any."""
    caps = active_caps()
    cap = sample_cap if sample_cap is not None else caps.sampled_pairs
    masks = lat.node_masks
    n = len(masks)
    total = n * n * n
    stride = max(1, total // max(cap, 1))
    counter = 0
    for a in masks:
        for b in masks:
            for c in masks:
                counter += 1
                if counter % stride:
                    continue
                if a | c != c:
                    continue
                left = lat.join_masks(a, b & c)
                right = lat.join_masks(a, b) & c
                if left != right:
                    return (a, b, c)
    return None
