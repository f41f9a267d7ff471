"""Ring-level classification: Jacobson radical, hollow dimensions of the
regular modules, units, locality, and the element-level dimension function.

Everything that has more than one natural computation route is computed by
all routes, with disagreement raised as InternalCheckError.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import FiniteModule, FiniteRing, Submodule, quotient_module, regular_module
from .dimension import d_values, hollow_dimension, length
from .errors import InternalCheckError
from .kernels import active as K
from .lattice import submodule_lattice
from .supplements import find_weak_supplement


def regular_cached(R: FiniteRing, side: str = "left") -> FiniteModule:
    """Regular module, built once per ring instance and side."""
    cache = getattr(R, "_regular_cache", None)
    if cache is None:
        cache = {}
        R._regular_cache = cache
    if side not in cache:
        cache[side] = regular_module(R, side)
    return cache[side]


def _neg_table(R: FiniteRing) -> list[int]:
    neg = [0] * R.order
    for a in range(R.order):
        row = R.add[a]
        for b in range(R.order):
            if row[b] == R.zero:
                neg[a] = b
                break
    return neg


def units(R: FiniteRing) -> tuple[int, ...]:
    """Two-sided units; one-sided invertibility must coincide (asserted)."""
    left_inv = set()
    right_inv = set()
    for a in range(R.order):
        row = R.mul[a]
        if any(row[b] == R.one for b in range(R.order)):
            right_inv.add(a)  # some b with a*b = 1
        if any(R.mul[b][a] == R.one for b in range(R.order)):
            left_inv.add(a)  # some b with b*a = 1
    if left_inv != right_inv:
        raise InternalCheckError(
            f"one-sided invertibility differs on {R.name}; finite rings cannot do that"
        )
    return tuple(sorted(left_inv))


def jacobson_radical(R: FiniteRing) -> Submodule:
    """Three agreeing routes: meet of maximal left ideals, meet of maximal
    right ideals, and the quasi-regularity criterion (1 - ra always a unit)."""
    left = regular_cached(R, "left")
    right = regular_cached(R, "right")
    by_left = submodule_lattice(left).radical_mask()
    by_right = submodule_lattice(right).radical_mask()
    unit_set = set(units(R))
    neg = _neg_table(R)
    by_units = 0
    for a in range(R.order):
        if all(R.add[R.one][neg[R.mul[r][a]]] in unit_set for r in range(R.order)):
            by_units |= 1 << a
    if not (by_left == by_right == by_units):
        raise InternalCheckError(
            f"Jacobson radical routes disagree on {R.name}: "
            f"left={by_left:#x} right={by_right:#x} units={by_units:#x}"
        )
    return Submodule(left, by_left)


@dataclass(eq=False)
class RingProfile:
    ring: FiniteRing
    jacobson: Submodule
    hdim_left: int
    hdim_right: int
    semisimple_quotient_length: int
    units: tuple[int, ...]
    local: bool
    vnr_quotient: bool

    def to_dict(self) -> dict:
        return {
            "ring": self.ring.name,
            "order": self.ring.order,
            "jacobson": sorted(self.jacobson.members()),
            "hdim_left": self.hdim_left,
            "hdim_right": self.hdim_right,
            "semisimple_quotient_length": self.semisimple_quotient_length,
            "units": list(self.units),
            "local": self.local,
            "vnr_quotient": self.vnr_quotient,
        }


def _vnr_quotient(R: FiniteRing, jac_mask: int) -> bool:
    # x y x = x modulo the radical, for every x
    neg = _neg_table(R)
    for a in range(R.order):
        if not any(
            (jac_mask >> R.add[R.mul[R.mul[a][y]][a]][neg[a]]) & 1 for y in range(R.order)
        ):
            return False
    return True


def classify(R: FiniteRing) -> RingProfile:
    """Full ring profile; asserts the left/right symmetric equality chain."""
    jac = jacobson_radical(R)
    left = regular_cached(R, "left")
    right = regular_cached(R, "right")
    hdim_left = hollow_dimension(left)[0]
    hdim_right = hollow_dimension(right)[0]
    ql, _ = quotient_module(left, jac)
    qr, _ = quotient_module(right, Submodule(right, jac.mask))
    len_left = length(ql)
    len_right = length(qr)
    if len_left != len_right:
        raise InternalCheckError(f"semisimple quotient lengths differ on {R.name}")
    if not (hdim_left == len_left == hdim_right):
        raise InternalCheckError(
            f"hollow-dimension symmetry fails on {R.name}: "
            f"left={hdim_left}, right={hdim_right}, length={len_left}"
        )
    maximal_left = submodule_lattice(left).maximal_masks
    return RingProfile(
        ring=R,
        jacobson=jac,
        hdim_left=hdim_left,
        hdim_right=hdim_right,
        semisimple_quotient_length=len_left,
        units=units(R),
        local=len(maximal_left) == 1,
        vnr_quotient=_vnr_quotient(R, jac.mask),
    )


def verify_lemma_ra_rb(R: FiniteRing):
    """Checks Ra ^ R(1-ra) = Ra(1-ra) over all (r, a); first failure or None."""
    left = regular_cached(R, "left")
    handle = left.handle()
    neg = _neg_table(R)
    cyclic = [K.cyclic_mask(handle, x) for x in range(R.order)]
    for r in range(R.order):
        for a in range(R.order):
            b = R.add[R.one][neg[R.mul[r][a]]]
            ra_mask = cyclic[a]
            rb_mask = cyclic[b]
            rab_mask = cyclic[R.mul[a][b]]
            if (ra_mask & rb_mask) != rab_mask:
                return (r, a)
    return None


@dataclass(eq=False)
class ElementDReport:
    d: dict[int, int]
    unit_axiom_failure: tuple | None
    additivity_failure: tuple | None
    order_failure: tuple | None

    @property
    def ok(self) -> bool:
        return (
            self.unit_axiom_failure is None
            and self.additivity_failure is None
            and self.order_failure is None
        )


def element_d_function(R: FiniteRing) -> ElementDReport:
    """d(a) = hdim(R/Ra) on the left regular module, with the axioms checked.

    Verifies d(a) = 0 implies a is a unit; d(a(1-ba)) = d(a) + d(1-ba) for
    all pairs; and the strict increase d(a(1-ba)) > d(a) whenever 1-ba is
    not a unit.
    """
    left = regular_cached(R, "left")
    handle = left.handle()
    dvals = d_values(left)
    neg = _neg_table(R)
    unit_set = set(units(R))
    d = {a: dvals[K.cyclic_mask(handle, a)] for a in range(R.order)}
    unit_failure = None
    for a in range(R.order):
        if d[a] == 0 and a not in unit_set:
            unit_failure = (a,)
            break
    additivity_failure = None
    order_failure = None
    for a in range(R.order):
        for b in range(R.order):
            x = R.add[R.one][neg[R.mul[b][a]]]  # 1 - ba
            ax = R.mul[a][x]
            if additivity_failure is None and d[ax] != d[a] + d[x]:
                additivity_failure = (a, b, d[ax], d[a], d[x])
            if order_failure is None and x not in unit_set and not d[ax] > d[a]:
                order_failure = (a, b, d[ax], d[a])
        if additivity_failure is not None and order_failure is not None:
            break
    return ElementDReport(d, unit_failure, additivity_failure, order_failure)


def is_semiregular_by_weak_supplements(R: FiniteRing) -> bool:
    """Weak supplements of principal one-sided ideals, cross-checked three ways.

    Route 1: every Ra has a weak supplement in the left regular module.
    Route 2: R modulo its radical is von Neumann regular.
    Route 3: the right-handed mirror of route 1.
    """
    left = regular_cached(R, "left")
    right = regular_cached(R, "right")
    lh, rh = left.handle(), right.handle()
    route1 = all(
        find_weak_supplement(left, Submodule(left, K.cyclic_mask(lh, a))) is not None
        for a in range(R.order)
    )
    route2 = _vnr_quotient(R, jacobson_radical(R).mask)
    route3 = all(
        find_weak_supplement(right, Submodule(right, K.cyclic_mask(rh, a))) is not None
        for a in range(R.order)
    )
    if not (route1 == route2 == route3):
        raise InternalCheckError(
            f"semiregularity routes disagree on {R.name}: {route1}, {route2}, {route3}"
        )
    return route1


def is_von_neumann_regular(R: FiniteRing) -> bool:
    """xyx = x solvable for every x (on the ring itself, not the quotient)."""
    for a in range(R.order):
        if not any(R.mul[R.mul[a][y]][a] == a for y in range(R.order)):
            return False
    return True
