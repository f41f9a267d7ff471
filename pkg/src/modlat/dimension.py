"""Radical, socle, length, and the two Goldie-type dimensions.

Hollow dimension is computed by three independent algorithms that must
agree: (A) a greedy decomposition into a coindependent family of maximal
submodules with hollow quotients and small intersection, (B) exact
branch-and-bound for the largest coindependent family, and (C) the
composition length of the module modulo its radical. Route disagreement
raises InternalCheckError, never a wrong answer.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteModule, Submodule, quotient_module
from .errors import InternalCheckError
from .lattice import (
    SubmoduleLattice,
    is_essential_mask,
    is_small_mask,
    submodule_lattice,
)


@dataclass(eq=False)
class HollowDecomposition:
    """Coindependent family with hollow quotients and small intersection."""

    family: tuple[Submodule, ...]
    quotient_hollow: tuple[bool, ...]
    intersection: Submodule


@dataclass(eq=False)
class DimensionProfile:
    radical: Submodule
    socle: Submodule
    length: int
    udim: int
    hdim: int
    semisimple: bool
    hollow: bool
    uniform: bool

    def to_dict(self) -> dict:
        return {
            "radical": sorted(self.radical.members()),
            "socle": sorted(self.socle.members()),
            "length": self.length,
            "udim": self.udim,
            "hdim": self.hdim,
            "semisimple": self.semisimple,
            "hollow": self.hollow,
            "uniform": self.uniform,
        }


def radical(M: FiniteModule) -> Submodule:
    """Intersection of all maximal submodules (M itself if none exist)."""
    return Submodule(M, submodule_lattice(M).radical_mask())


def socle(M: FiniteModule) -> Submodule:
    """Join of all minimal nonzero submodules (zero if none exist)."""
    return Submodule(M, submodule_lattice(M).socle_mask())


def is_semisimple(M: FiniteModule) -> bool:
    """Every submodule is a direct summand; cross-checked against socle = M."""
    lat = submodule_lattice(M)
    zero, full = lat.zero_mask, lat.full_mask
    total = full.bit_count()
    groups = lat.nodes_by_count()
    by_complements = True
    for n in lat.node_masks:
        # a direct complement k has |n| * |k| = |M|, which prunes the scan
        candidates = groups.get(total // n.bit_count(), ())
        if not any(
            (n & k) == zero and lat.join_masks(n, k) == full for k in candidates
        ):
            by_complements = False
            break
    by_socle = lat.socle_mask() == full
    if by_complements != by_socle:
        raise InternalCheckError(
            f"semisimplicity routes disagree on {M.name}: "
            f"complements={by_complements}, socle={by_socle}"
        )
    return by_complements


def _covers_above(lat: SubmoduleLattice, lo: int, within: int) -> list[int]:
    ups = [m for m in lat.masks_within(within) if m != lo and lo | m == m]
    return [
        m
        for m in ups
        if not any(o != lo and o != m and lo | o == o and o | m == m for o in ups)
    ]


def _covers_below(lat: SubmoduleLattice, hi: int, above: int) -> list[int]:
    downs = [m for m in lat.node_masks if m != hi and m | hi == hi and above | m == m]
    return [
        m
        for m in downs
        if not any(o != hi and o != m and m | o == o and o | hi == hi for o in downs)
    ]


def _chain_length_within(lat: SubmoduleLattice, lo: int, hi: int) -> int:
    """Length of one maximal chain from lo up to hi, plus an agreement check.

    A second chain is walked downward with the opposite tie-break; the two
    lengths must coincide (all maximal chains in a modular lattice of
    finite length do).
    """
    steps_up = 0
    cur = lo
    while cur != hi:
        cover = _covers_above(lat, cur, hi)
        cur = cover[0]
        steps_up += 1
    steps_down = 0
    cur = hi
    while cur != lo:
        cover = _covers_below(lat, cur, lo)
        cur = cover[-1]
        steps_down += 1
    if steps_up != steps_down:
        raise InternalCheckError(
            f"maximal chains of different lengths on {lat.module.name}: "
            f"{steps_up} vs {steps_down}"
        )
    return steps_up


def length(M: FiniteModule) -> int:
    """Composition length: the common length of all maximal submodule chains."""
    lat = submodule_lattice(M)
    return _chain_length_within(lat, lat.zero_mask, lat.full_mask)


def uniform_dimension(M: FiniteModule) -> tuple[int, tuple[Submodule, ...]]:
    """Length of the socle, with a maximal independent family of atoms as witness.

    The socle is essential and is a finite direct sum of simple (hence
    uniform) submodules, so its length is the uniform dimension. The greedy
    atom family is checked for independence and for summing to the socle.
    """
    lat = submodule_lattice(M)
    soc = lat.socle_mask()
    udim = _chain_length_within(lat, lat.zero_mask, soc)
    family = []
    acc = lat.zero_mask
    for atom in lat.minimal_masks:
        if (atom & acc) == lat.zero_mask:
            family.append(atom)
            acc = lat.join_masks(acc, atom)
    if acc != soc:
        raise InternalCheckError(f"independent atoms do not span the socle of {M.name}")
    for i, a in enumerate(family):
        rest = lat.zero_mask
        for j, b in enumerate(family):
            if j != i:
                rest = lat.join_masks(rest, b)
        if (a & rest) != lat.zero_mask:
            raise InternalCheckError(f"atom family not independent on {M.name}")
    if len(family) != udim:
        raise InternalCheckError(
            f"independent-family size {len(family)} != socle length {udim} on {M.name}"
        )
    if soc != lat.zero_mask and not is_essential_mask(lat, soc):
        raise InternalCheckError(f"socle not essential on {M.name}")
    if M.order > 1 and soc == lat.zero_mask:
        raise InternalCheckError(f"nonzero finite module with zero socle: {M.name}")
    return udim, tuple(Submodule(M, m) for m in family)


def _is_hollow_def(M: FiniteModule) -> bool:
    # definitional: nonzero, and every proper submodule is small
    if M.order <= 1:
        return False
    lat = submodule_lattice(M)
    return all(
        is_small_mask(lat, m) for m in lat.node_masks if m != lat.full_mask
    )


def _is_uniform_def(M: FiniteModule) -> bool:
    if M.order <= 1:
        return False
    lat = submodule_lattice(M)
    return all(
        is_essential_mask(lat, m) for m in lat.node_masks if m != lat.zero_mask
    )


def _fast_coindependent_masks(lat: SubmoduleLattice, masks) -> bool:
    # binding case of the definition: each member against the meet of all others
    full = lat.full_mask
    k = len(masks)
    prefix = [full] * (k + 1)
    for i in range(k):
        prefix[i + 1] = prefix[i] & masks[i]
    suffix = [full] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] & masks[i]
    for i in range(k):
        if lat.join_masks(masks[i], prefix[i] & suffix[i + 1]) != full:
            return False
    return True


def _hdim_greedy_decomposition(M: FiniteModule, lat: SubmoduleLattice) -> HollowDecomposition:
    # Algorithm A: grow a coindependent subfamily of the maximal submodules
    # in canonical order; quotients by maximal submodules are simple, hence
    # hollow, and an inclusion-maximal such family has small intersection.
    # Every claimed property is re-checked below.
    family: list[int] = []
    for m in lat.maximal_masks:
        if _fast_coindependent_masks(lat, family + [m]):
            family.append(m)
    inter = lat.full_mask
    for m in family:
        inter &= m
    hollow_flags = []
    for m in family:
        Q, _ = quotient_module(M, Submodule(M, m))
        hollow_flags.append(_is_hollow_def(Q))
    if not all(hollow_flags):
        raise InternalCheckError(f"non-hollow quotient in greedy decomposition of {M.name}")
    if not _fast_coindependent_masks(lat, family):
        raise InternalCheckError(f"greedy family not coindependent on {M.name}")
    if not is_small_mask(lat, inter):
        raise InternalCheckError(f"greedy family intersection not small on {M.name}")
    return HollowDecomposition(
        family=tuple(Submodule(M, m) for m in family),
        quotient_hollow=tuple(hollow_flags),
        intersection=Submodule(M, inter),
    )


def _max_coindependent_family_size(lat: SubmoduleLattice) -> int:
    # Algorithm B: exact maximum cardinality of a coindependent family.
    # Enlarging each member of a coindependent family to a maximal
    # submodule containing it preserves coindependence, so the maximum is
    # attained on families of maximal submodules; branch and bound there.
    maximals = lat.maximal_masks
    k = len(maximals)
    best = 0

    def extend(start: int, chosen: list[int]):
        nonlocal best
        if len(chosen) > best:
            best = len(chosen)
        for idx in range(start, k):
            if len(chosen) + (k - idx) <= best:
                break
            cand = chosen + [maximals[idx]]
            if _fast_coindependent_masks(lat, cand):
                extend(idx + 1, cand)

    extend(0, [])
    return best


def hollow_dimension(M: FiniteModule) -> tuple[int, HollowDecomposition]:
    """Hollow (dual Goldie) dimension plus the witnessing decomposition."""
    lat = submodule_lattice(M)
    decomp = _hdim_greedy_decomposition(M, lat)
    a = len(decomp.family)
    b = _max_coindependent_family_size(lat)
    rad_q, _ = quotient_module(M, Submodule(M, lat.radical_mask()))
    c = length(rad_q)
    if not (a == b == c):
        raise InternalCheckError(
            f"hollow dimension routes disagree on {M.name}: "
            f"decomposition={a}, max-family={b}, radical-length={c}"
        )
    return a, decomp


def is_hollow(M: FiniteModule) -> bool:
    """Nonzero with every proper submodule small; cross-checked against hdim = 1."""
    by_def = _is_hollow_def(M)
    by_dim = M.order > 1 and hollow_dimension(M)[0] == 1
    if by_def != by_dim:
        raise InternalCheckError(f"hollowness routes disagree on {M.name}")
    return by_def


def is_uniform(M: FiniteModule) -> bool:
    """Nonzero with every nonzero submodule essential; cross-checked against udim = 1."""
    by_def = _is_uniform_def(M)
    by_dim = M.order > 1 and uniform_dimension(M)[0] == 1
    if by_def != by_dim:
        raise InternalCheckError(f"uniformity routes disagree on {M.name}")
    return by_def


def d_values(M: FiniteModule) -> dict[int, int]:
    """hdim of the quotient by each submodule, keyed by submodule mask."""
    lat = submodule_lattice(M)
    cache = getattr(lat, "_d_values", None)
    if cache is None:
        cache = {}
        for mask in lat.node_masks:
            Q, _ = quotient_module(M, Submodule(M, mask))
            cache[mask] = hollow_dimension(Q)[0]
        lat._d_values = cache
    return cache


def camps_dicks_d(M: FiniteModule, N: Submodule) -> int:
    """The quotient-dimension function N |-> hdim(M/N)."""
    lat = submodule_lattice(M)
    cache = getattr(lat, "_d_values", None)
    if cache is not None and N.mask in cache:
        return cache[N.mask]
    Q, _ = quotient_module(M, N)
    return hollow_dimension(Q)[0]


@dataclass(eq=False)
class DAxiomFailure:
    kind: str  # "zero-value" or "additivity"
    n_mask: int
    l_mask: int | None
    detail: str


def verify_d_axioms(M: FiniteModule) -> DAxiomFailure | None:
    """Checks d(N)=0 => N=M, and d(N^L)=d(N)+d(L) whenever N+L=M.

    Quantifies over all submodule pairs with N + L = M; returns the first
    counterexample in canonical pair order, or None.
    """
    lat = submodule_lattice(M)
    d = d_values(M)
    full = lat.full_mask
    for mask in lat.node_masks:
        if d[mask] == 0 and mask != full:
            return DAxiomFailure("zero-value", mask, None, f"d=0 on proper submodule {mask:#x}")
    masks = lat.node_masks
    for i, n in enumerate(masks):
        for l in masks[i:]:
            if lat.join_masks(n, l) != full:
                continue
            if d[n & l] != d[n] + d[l]:
                return DAxiomFailure(
                    "additivity",
                    n,
                    l,
                    f"d(meet)={d[n & l]} but d(N)+d(L)={d[n]}+{d[l]}",
                )
    return None


def dimension_profile(M: FiniteModule) -> DimensionProfile:
    """All dimension data of one module, with the dual pairs cross-checked."""
    hdim, _ = hollow_dimension(M)
    udim, _ = uniform_dimension(M)
    return DimensionProfile(
        radical=radical(M),
        socle=socle(M),
        length=length(M),
        udim=udim,
        hdim=hdim,
        semisimple=is_semisimple(M),
        hollow=is_hollow(M),
        uniform=is_uniform(M),
    )
