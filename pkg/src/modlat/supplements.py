"""Supplements, weak supplements, and the constructive transfer machinery.

Every finite module is artinian, so the boolean predicates here are
expected constant-true on real inputs; the value of this module is the
witnesses it produces and the fact that each one re-verifies from scratch.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import active_caps
from .core import (
    FiniteModule,
    FiniteRing,
    ModuleHom,
    Submodule,
    direct_sum,
    greedy_generators,
    quotient_module,
    regular_module,
    submodule_as_module,
    submodule_violations,
)
from .dimension import is_semisimple, radical
from .errors import InternalCheckError, PreconditionError
from .kernels import active as K
from .lattice import (
    complement_of,
    is_essential_mask,
    is_small_mask,
    submodule_lattice,
)


@dataclass(eq=False)
class WeakSupplementWitness:
    """A verified pair: target + supplement = M with small intersection."""

    target: Submodule
    supplement: Submodule
    intersection: Submodule


def verify_weak_supplement(M: FiniteModule, n_mask: int, l_mask: int) -> str | None:
    """From-scratch certificate check; returns a failure reason or None.

    Recomputes closure, sum and smallness directly instead of trusting any
    previously computed witness fields.
    """
    for mask, label in ((n_mask, "target"), (l_mask, "supplement")):
        bad = submodule_violations(Submodule(M, mask))
        if bad:
            return f"{label} is not a submodule: {bad[0]}"
    if K.sum_mask(M.handle(), n_mask, l_mask) != M.full_mask():
        return "sum is a proper submodule"
    lat = submodule_lattice(M)
    if not is_small_mask(lat, n_mask & l_mask):
        return "intersection is not small"
    return None


def _witness(M: FiniteModule, n_mask: int, l_mask: int) -> WeakSupplementWitness:
    reason = verify_weak_supplement(M, n_mask, l_mask)
    if reason is not None:
        raise InternalCheckError(f"weak-supplement certificate failed on {M.name}: {reason}")
    return WeakSupplementWitness(
        target=Submodule(M, n_mask),
        supplement=Submodule(M, l_mask),
        intersection=Submodule(M, n_mask & l_mask),
    )


def find_supplement(M: FiniteModule, N: Submodule) -> Submodule:
    """Least-canonical submodule minimal with N + L = M.

    The defining minimality is equivalent to N ^ L being small in L; that
    equivalent condition is recomputed and asserted before returning.
    """
    lat = submodule_lattice(M)
    full = lat.full_mask
    candidates = [m for m in lat.node_masks if lat.join_masks(N.mask, m) == full]
    minimal = [m for m in candidates if not any(o != m and o | m == m for o in candidates)]
    chosen = minimal[0]
    if not is_small_mask(lat, N.mask & chosen, within=chosen):
        raise InternalCheckError(f"supplement of {N} in {M.name} fails the smallness criterion")
    return Submodule(M, chosen)


def find_weak_supplement(M: FiniteModule, N: Submodule) -> WeakSupplementWitness | None:
    """Least-canonical L with N + L = M and N ^ L small in M, if one exists."""
    lat = submodule_lattice(M)
    full = lat.full_mask
    for m in lat.node_masks:
        if lat.join_masks(N.mask, m) == full and is_small_mask(lat, N.mask & m):
            return _witness(M, N.mask, m)
    return None


def is_weakly_supplemented(M: FiniteModule):
    """Quantifies find_weak_supplement over all submodules; returns (bool, witness map)."""
    lat = submodule_lattice(M)
    witnesses: dict[int, WeakSupplementWitness] = {}
    for mask in lat.node_masks:
        w = find_weak_supplement(M, Submodule(M, mask))
        if w is None:
            return False, witnesses
        witnesses[mask] = w
    return True, witnesses


def is_supplemented(M: FiniteModule):
    """Quantifies find_supplement over all submodules; returns (bool, witness map)."""
    lat = submodule_lattice(M)
    witnesses: dict[int, Submodule] = {}
    for mask in lat.node_masks:
        witnesses[mask] = find_supplement(M, Submodule(M, mask))
    return True, witnesses


def is_semilocal_module(M: FiniteModule) -> bool:
    """True iff M modulo its radical is semisimple."""
    Q, _ = quotient_module(M, radical(M))
    return is_semisimple(Q)


def _is_semisimple_within(lat, within: int) -> bool:
    # socle criterion localized to the submodule, cross-checked by complements
    by_socle = lat.socle_within(within) == within
    zero = lat.zero_mask
    total = within.bit_count()
    by_complements = True
    inside = lat.masks_within(within)
    for n in inside:
        need = total // n.bit_count()
        if not any(
            (n & k) == zero and lat.join_masks(n, k) == within
            for k in inside
            if k.bit_count() == need
        ):
            by_complements = False
            break
    if by_socle != by_complements:
        raise InternalCheckError("relative semisimplicity routes disagree")
    return by_socle


def semisimple_quotient_decomposition(M: FiniteModule, N: Submodule):
    """Split M = M1 (+) M2 with M1 semisimple, N essential in M2, M2/N semisimple.

    Follows the constructive route: M1 is a complement of N; the quotient
    splits off the image of M1 + N, and M2 is the preimage of the chosen
    complement. All structural claims are re-verified before returning.
    """
    Q, proj = quotient_module(M, N)
    if not is_semisimple(Q):
        raise PreconditionError(f"{M.name}/{sorted(N.members())} is not semisimple")
    lat = submodule_lattice(M)
    m1 = complement_of(N, M)
    a_mask = proj.map_mask(lat.join_masks(m1.mask, N.mask))
    qlat = submodule_lattice(Q)
    m2bar = complement_of(Submodule(Q, a_mask), Q)
    if qlat.join_masks(a_mask, m2bar.mask) != qlat.full_mask:
        raise InternalCheckError("complement in a semisimple quotient is not direct")
    m2_mask = proj.preimage_mask(m2bar.mask)
    if lat.join_masks(m1.mask, m2_mask) != lat.full_mask or (m1.mask & m2_mask) != lat.zero_mask:
        raise InternalCheckError("decomposition is not direct")
    if not _is_semisimple_within(lat, m1.mask):
        raise InternalCheckError("first summand is not semisimple")
    if not is_essential_mask(lat, N.mask, within=m2_mask):
        raise InternalCheckError("quotiented submodule is not essential in the second summand")
    S2, embed = submodule_as_module(M, m2_mask)
    n_in_s2 = embed.preimage_mask(N.mask)
    QS2, _ = quotient_module(S2, Submodule(S2, n_in_s2))
    if not is_semisimple(QS2):
        raise InternalCheckError("second summand modulo N is not semisimple")
    return m1, Submodule(M, m2_mask)


def push_forward_weak_supplement(
    f: ModuleHom, K_sub: Submodule, L: Submodule
) -> WeakSupplementWitness:
    """Image of a weak supplement of the preimage is a weak supplement downstairs."""
    if not f.is_surjective():
        raise PreconditionError("push-forward needs a surjective map")
    if K_sub.module is not f.target or L.module is not f.source:
        raise PreconditionError("submodules do not live in the map's modules")
    pre = f.preimage_mask(K_sub.mask)
    reason = verify_weak_supplement(f.source, pre, L.mask)
    if reason is not None:
        raise PreconditionError(f"L is not a weak supplement of the preimage: {reason}")
    fl = f.map_mask(L.mask)
    reason = verify_weak_supplement(f.target, K_sub.mask, fl)
    if reason is not None:
        raise PreconditionError(f"push-forward failed verification: {reason}")
    return _witness(f.target, K_sub.mask, fl)


def pull_back_weak_supplement(
    f: ModuleHom, X: Submodule, L: Submodule
) -> WeakSupplementWitness:
    """Preimage of a weak supplement along a small epimorphism, verified upstairs."""
    if not f.is_surjective():
        raise PreconditionError("pull-back needs a surjective map")
    lat = submodule_lattice(f.source)
    if not is_small_mask(lat, f.kernel_mask()):
        raise PreconditionError("map is not a small epimorphism (kernel is not small)")
    if X.module is not f.target or L.module is not f.source:
        raise PreconditionError("submodules do not live in the map's modules")
    fl = f.map_mask(L.mask)
    reason = verify_weak_supplement(f.target, fl, X.mask)
    if reason is not None:
        raise PreconditionError(f"X is not a weak supplement of the image: {reason}")
    pre = f.preimage_mask(X.mask)
    reason = verify_weak_supplement(f.source, L.mask, pre)
    if reason is not None:
        raise PreconditionError(f"pull-back failed verification: {reason}")
    return _witness(f.source, L.mask, pre)


def weak_supplement_from_summands(
    M: FiniteModule, M1: Submodule, K_sub: Submodule, N: Submodule
) -> WeakSupplementWitness:
    """Builds a weak supplement of K from one for M1 + K, working inside M1.

    This is the inductive step that makes finite sums of weakly
    supplemented modules weakly supplemented: with N a weak supplement of
    M1 + K, a weak supplement L of (K + N) ^ M1 inside M1 yields N + L as
    a weak supplement of K.
    """
    lat = submodule_lattice(M)
    m1k = lat.join_masks(M1.mask, K_sub.mask)
    reason = verify_weak_supplement(M, m1k, N.mask)
    if reason is not None:
        raise PreconditionError(f"N is not a weak supplement of M1 + K: {reason}")
    t_mask = lat.join_masks(K_sub.mask, N.mask) & M1.mask
    l_mask = None
    for m in lat.masks_within(M1.mask):
        if lat.join_masks(t_mask, m) == M1.mask and is_small_mask(lat, t_mask & m, within=M1.mask):
            l_mask = m
            break
    if l_mask is None:
        raise InternalCheckError("no weak supplement inside the summand")
    combined = lat.join_masks(N.mask, l_mask)
    reason = verify_weak_supplement(M, K_sub.mask, combined)
    if reason is not None:
        raise InternalCheckError(f"constructed supplement failed verification: {reason}")
    return _witness(M, K_sub.mask, combined)


@dataclass(eq=False)
class FreeCoverCertificate:
    """Free module onto M with a verified small-kernel projective-cover split."""

    rank: int
    generators: tuple[int, ...]
    free: FiniteModule
    cover: ModuleHom
    kernel: Submodule
    supplement: Submodule
    overlap: Submodule  # kernel ^ supplement, small in the free module


def free_cover_decomposition(R: FiniteRing, M: FiniteModule) -> FreeCoverCertificate:
    """Cover M by R^k along a greedy-minimal generating set and split the kernel.

    The returned supplement L of the kernel makes x |-> (f(x), x + L) a
    small epimorphism out of R^k; the equivalent mask-level facts
    (kernel + L = R^k, kernel ^ L small) are verified from scratch, and
    the combined map is constructed literally when the caps allow.
    """
    if M.ring is not R:
        raise PreconditionError("module is not over the given ring")
    gens = greedy_generators(M)
    k = len(gens)
    F = direct_sum([regular_module(R, M.side) for _ in range(k)], ring=R, side=M.side)
    images = []
    for x in range(F.order):
        coords = []
        rem = x
        for _ in range(k):
            rem, d = divmod(rem, R.order)
            coords.append(d)
        coords.reverse()
        acc = M.zero
        for r, g in zip(coords, gens):
            acc = M.add[acc][M.act[r][g]]
        images.append(acc)
    cover = ModuleHom(F, M, tuple(images))
    if not cover.is_surjective():
        raise InternalCheckError("generating set does not cover the module")
    ker = cover.kernel_mask()
    witness = find_weak_supplement(F, Submodule(F, ker))
    if witness is None:
        raise InternalCheckError("kernel has no weak supplement in the free cover")
    l_mask = witness.supplement.mask
    overlap = ker & l_mask
    caps = active_caps()
    Qf, projq = quotient_module(F, witness.supplement)
    if M.order * Qf.order <= caps.max_elements:
        combined_target = direct_sum([M, Qf], ring=R, side=M.side)
        # literal construction of x |-> (f(x), x + L)
        comb_images = tuple(
            images[x] * Qf.order + projq.images[x] for x in range(F.order)
        )
        comb = ModuleHom(F, combined_target, comb_images)
        if not comb.is_surjective():
            raise InternalCheckError("combined cover map is not surjective")
        if comb.kernel_mask() != overlap:
            raise InternalCheckError("combined cover kernel differs from kernel ^ supplement")
        if not is_small_mask(submodule_lattice(F), comb.kernel_mask()):
            raise InternalCheckError("combined cover kernel is not small")
    return FreeCoverCertificate(
        rank=k,
        generators=gens,
        free=F,
        cover=cover,
        kernel=Submodule(F, ker),
        supplement=witness.supplement,
        overlap=Submodule(F, overlap),
    )


def verify_free_cover(cert: FreeCoverCertificate) -> str | None:
    """Independent re-check of a free-cover certificate; reason or None."""
    F, M = cert.free, cert.cover.target
    if not cert.cover.is_surjective():
        return "cover map is not surjective"
    if cert.cover.kernel_mask() != cert.kernel.mask:
        return "stored kernel is wrong"
    lat = submodule_lattice(F)
    if lat.join_masks(cert.kernel.mask, cert.supplement.mask) != lat.full_mask:
        return "kernel + supplement is proper"
    if (cert.kernel.mask & cert.supplement.mask) != cert.overlap.mask:
        return "stored overlap is wrong"
    if not is_small_mask(lat, cert.overlap.mask):
        return "overlap is not small"
    return None
