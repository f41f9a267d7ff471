"""Hom-sets, endomorphism rings, self-projectivity, Baer injectivity, and
the two dimension dualities (hollow dimension of a module vs its
endomorphism ring; hollow vs uniform dimension through an injective
cogenerator).

Endomorphism composition is "apply f, then g", which makes a left module a
right module over its endomorphism ring via m.f = f(m); that is the
orientation both dualities use. Hollow dimension of a ring is side
symmetric, so reported values do not depend on this convention.
"""

from __future__ import annotations

from dataclasses import dataclass

from .config import active_caps
from .core import (
    FiniteModule,
    FiniteRing,
    ModuleHom,
    Submodule,
    quotient_module,
    submodule_as_module,
    validate,
)
from .dimension import hollow_dimension, radical, uniform_dimension
from .errors import CapExceeded, PreconditionError, ValidationError
from .kernels import active as K
from .lattice import submodule_lattice
from .ringclass import jacobson_radical, regular_cached
from .supplements import is_semilocal_module


@dataclass(eq=False)
class HomSet:
    """All module maps source -> target, in canonical (image tuple) order."""

    source: FiniteModule
    target: FiniteModule
    maps: tuple[ModuleHom, ...]

    def __len__(self):
        return len(self.maps)

    def rows(self) -> list[tuple[int, ...]]:
        return [h.images for h in self.maps]

    def index_of(self, images: tuple[int, ...]) -> int:
        if self._index is None:
            self._index = {h.images: i for i, h in enumerate(self.maps)}
        return self._index[images]

    def __post_init__(self):
        self._index = None


def hom_set(M: FiniteModule, N: FiniteModule, caps=None, cap_override: int | None = None) -> HomSet:
    """Enumerate Hom(M, N) by generator images with consistency pruning."""
    if M.ring is not N.ring:
        raise PreconditionError("hom source and target live over different rings")
    if M.side != N.side:
        raise PreconditionError("hom source and target have different sides")
    caps = caps or active_caps()
    cap = cap_override if cap_override is not None else caps.max_homs
    from .core import greedy_generators

    gens = greedy_generators(M)
    rows = K.enumerate_homs(M.handle(), N.handle(), list(gens), cap)
    rows.sort()
    maps = tuple(ModuleHom(M, N, tuple(r)) for r in rows)
    return HomSet(M, N, maps)


def endomorphism_ring(M: FiniteModule, caps=None) -> tuple[FiniteRing, HomSet]:
    """End(M) as a validated finite ring on the hom-set carrier."""
    caps = caps or active_caps()
    homs = hom_set(M, M, caps, cap_override=caps.max_end_ring)
    n = len(homs)
    rows = homs.rows()
    add_table = K.sum_index(rows, M.add)
    comp = K.compose_index(rows, rows, rows)  # comp[o][i] = index of "apply i, then o"
    mul_table = tuple(tuple(comp[g][f] for g in range(n)) for f in range(n))
    zero_images = tuple(M.zero for _ in range(M.order))
    one_images = tuple(range(M.order))
    ring = FiniteRing(
        order=n,
        add=tuple(tuple(r) for r in add_table),
        mul=mul_table,
        zero=homs.index_of(zero_images),
        one=homs.index_of(one_images),
        name=f"End({M.name})",
    )
    bad = validate(ring)
    if bad:
        raise ValidationError(bad)
    return ring, homs


def module_over_endomorphisms(M: FiniteModule, caps=None):
    """M as a right module over End(M); returns (module, ring, homs)."""
    ring, homs = endomorphism_ring(M, caps)
    act = tuple(h.images for h in homs.maps)
    GE = FiniteModule(
        ring=ring,
        side="right",
        order=M.order,
        add=M.add,
        zero=M.zero,
        act=act,
        name=f"{M.name} over {ring.name}",
    )
    bad = validate(GE)
    if bad:
        raise ValidationError(bad)
    return GE, ring, homs


@dataclass(eq=False)
class BimoduleView:
    """Hom(M, Q) as a right module over End(Q)."""

    homs: HomSet
    ring: FiniteRing
    ring_homs: HomSet
    module: FiniteModule


def hom_module_over_end(M: FiniteModule, Q: FiniteModule, caps=None) -> BimoduleView:
    caps = caps or active_caps()
    ring, ring_homs = endomorphism_ring(Q, caps)
    homs = hom_set(M, Q, caps)
    rows = homs.rows()
    add_table = K.sum_index(rows, Q.add)
    act_table = K.compose_index(rows, ring_homs.rows(), rows)  # act[t][f] = index of t after f
    zero_images = tuple(Q.zero for _ in range(M.order))
    module = FiniteModule(
        ring=ring,
        side="right",
        order=len(homs),
        add=tuple(tuple(r) for r in add_table),
        zero=homs.index_of(zero_images),
        act=tuple(tuple(r) for r in act_table),
        name=f"Hom({M.name},{Q.name}) over {ring.name}",
    )
    bad = validate(module)
    if bad:
        raise ValidationError(bad)
    return BimoduleView(homs=homs, ring=ring, ring_homs=ring_homs, module=module)


def is_self_projective(M: FiniteModule, caps=None, _endos: HomSet | None = None):
    """True iff composing with each quotient projection hits every hom.

    Returns (flag, counterexample): the least hom into a quotient that does
    not lift, or None.
    """
    caps = caps or active_caps()
    endos = _endos if _endos is not None else hom_set(M, M, caps)
    lat = submodule_lattice(M)
    for mask in lat.node_masks:
        Q, proj = quotient_module(M, Submodule(M, mask))
        induced = {tuple(proj.images[v] for v in h.images) for h in endos.maps}
        target = hom_set(M, Q, caps)
        for h in target.maps:
            if h.images not in induced:
                return False, h
    return True, None


@dataclass(eq=False)
class TakeuchiReport:
    module: FiniteModule
    status: str  # "verified" | "skipped" | "failed"
    reason: str | None = None
    witness: ModuleHom | None = None
    hdim_module: int | None = None
    hdim_end: int | None = None
    cover_hdim: int | None = None  # hdim of Hom(R, M) over End(R), when computed
    cover_ok: bool | None = None

    def to_dict(self) -> dict:
        out = {
            "module": self.module.name,
            "status": self.status,
            "hdim_module": self.hdim_module,
            "hdim_end": self.hdim_end,
        }
        if self.reason:
            out["reason"] = self.reason
        if self.witness is not None:
            out["witness_images"] = list(self.witness.images)
            out["witness_target_order"] = self.witness.target.order
        if self.cover_hdim is not None:
            out["cover_hdim"] = self.cover_hdim
            out["cover_ok"] = self.cover_ok
        return out


def verify_takeuchi(M: FiniteModule, caps=None) -> TakeuchiReport:
    """hdim(M) = hdim(End(M)) for self-projective M, with skip reasons."""
    caps = caps or active_caps()
    try:
        endos = hom_set(M, M, caps, cap_override=caps.max_end_ring)
    except CapExceeded as exc:
        return TakeuchiReport(M, "skipped", reason=str(exc))
    sp, counter = is_self_projective(M, caps, _endos=endos)
    if not sp:
        return TakeuchiReport(M, "skipped", reason="not self-projective", witness=counter)
    try:
        S, _ = endomorphism_ring(M, caps)
    except CapExceeded as exc:
        return TakeuchiReport(M, "skipped", reason=str(exc))
    hm = hollow_dimension(M)[0]
    hs = hollow_dimension(regular_cached(S, "left"))[0]
    report = TakeuchiReport(
        M,
        "verified" if hm == hs else "failed",
        hdim_module=hm,
        hdim_end=hs,
    )
    _takeuchi_cover_extra(M, report, caps)
    return report


def _takeuchi_cover_extra(M: FiniteModule, report: TakeuchiReport, caps) -> None:
    # hdim(M) <= hdim of Hom(P, M) over End(P) for the regular cover P
    if M.side != "left":
        return
    P = regular_cached(M.ring, "left")
    try:
        SP, sp_homs = endomorphism_ring(P, caps)
        hpm = hom_set(P, M, caps)
    except CapExceeded:
        return
    rows = hpm.rows()
    comp = K.compose_index(sp_homs.rows(), rows, rows)  # comp[h][s] = index of h after s
    act = tuple(tuple(comp[h][s] for h in range(len(rows))) for s in range(len(sp_homs)))
    add_table = K.sum_index(rows, M.add)
    module = FiniteModule(
        ring=SP,
        side="left",
        order=len(rows),
        add=tuple(tuple(r) for r in add_table),
        zero=hpm.index_of(tuple(M.zero for _ in range(P.order))),
        act=act,
        name=f"Hom({P.name},{M.name})",
    )
    bad = validate(module)
    if bad:
        raise ValidationError(bad)
    report.cover_hdim = hollow_dimension(module)[0]
    report.cover_ok = report.hdim_module <= report.cover_hdim


def is_injective(Q: FiniteModule, caps=None) -> bool:
    """Baer test: every hom from every one-sided ideal into Q is a scalar action."""
    caps = caps or active_caps()
    reg = regular_cached(Q.ring, Q.side)
    lat = submodule_lattice(reg)
    for mask in lat.node_masks:
        S_I, embed = submodule_as_module(reg, mask)
        members = embed.images
        for f in hom_set(S_I, Q, caps).maps:
            if not any(
                all(f.images[i] == Q.act[members[i]][q] for i in range(S_I.order))
                for q in range(Q.order)
            ):
                return False
    return True


def is_cogenerator(Q: FiniteModule, caps=None) -> bool:
    """True iff every simple module (regular modulo a maximal ideal) embeds in Q."""
    caps = caps or active_caps()
    reg = regular_cached(Q.ring, Q.side)
    lat = submodule_lattice(reg)
    for mask in lat.maximal_masks:
        S, _ = quotient_module(reg, Submodule(reg, mask))
        if not any(h.is_injective() for h in hom_set(S, Q, caps).maps):
            return False
    return True


@dataclass(eq=False)
class PageReport:
    module: FiniteModule
    cogenerator: FiniteModule
    status: str
    hdim_module: int | None = None
    udim_homs: int | None = None
    hom_count: int | None = None

    def to_dict(self) -> dict:
        return {
            "module": self.module.name,
            "cogenerator": self.cogenerator.name,
            "status": self.status,
            "hdim_module": self.hdim_module,
            "udim_homs": self.udim_homs,
            "hom_count": self.hom_count,
        }


def verify_page(M: FiniteModule, Q: FiniteModule, caps=None) -> PageReport:
    """hdim(M) = udim(Hom(M, Q)) over End(Q), for an injective cogenerator Q."""
    caps = caps or active_caps()
    if not is_injective(Q, caps):
        raise PreconditionError(f"{Q.name} fails the injectivity test")
    if not is_cogenerator(Q, caps):
        raise PreconditionError(f"{Q.name} is not a cogenerator")
    view = hom_module_over_end(M, Q, caps)
    hm = hollow_dimension(M)[0]
    ud = uniform_dimension(view.module)[0]
    return PageReport(
        M,
        Q,
        "verified" if hm == ud else "failed",
        hdim_module=hm,
        udim_homs=ud,
        hom_count=len(view.homs),
    )


@dataclass(eq=False)
class GoodModuleReport:
    module: FiniteModule
    target: FiniteModule
    checked: int
    total: int
    failure: ModuleHom | None = None

    @property
    def ok(self) -> bool:
        return self.failure is None

    def to_dict(self) -> dict:
        out = {
            "module": self.module.name,
            "target": self.target.name,
            "checked": self.checked,
            "total": self.total,
            "ok": self.ok,
        }
        if self.failure is not None:
            out["failure_images"] = list(self.failure.images)
        return out


def verify_good_module(M: FiniteModule, N: FiniteModule, caps=None) -> GoodModuleReport:
    """Checks f(Rad M) = Rad(f(M)) over a deterministic sample of Hom(M, N)."""
    caps = caps or active_caps()
    if not is_semilocal_module(M):
        raise PreconditionError(f"{M.name} is not semilocal")
    homs = hom_set(M, N, caps)
    rad_mask = radical(M).mask
    lat_n = submodule_lattice(N)
    total = len(homs)
    if total > caps.good_module_hom_sample:
        stride = -(-total // caps.good_module_hom_sample)
        picks = range(0, total, stride)
    else:
        picks = range(total)
    checked = 0
    for i in picks:
        f = homs.maps[i]
        lhs = f.map_mask(rad_mask)
        rhs = lat_n.radical_within(f.image_mask())
        checked += 1
        if lhs != rhs:
            return GoodModuleReport(M, N, checked, total, failure=f)
    return GoodModuleReport(M, N, checked, total)


@dataclass(eq=False)
class GeneratorDualityReport:
    ring: FiniteRing
    status: str
    reason: str | None = None
    hdim_over_end: int | None = None
    quotient_length: int | None = None

    def to_dict(self) -> dict:
        return {
            "ring": self.ring.name,
            "status": self.status,
            "reason": self.reason,
            "hdim_over_end": self.hdim_over_end,
            "quotient_length": self.quotient_length,
        }


def verify_generator_duality(R: FiniteRing, caps=None) -> GeneratorDualityReport:
    """For self-injective cogenerator rings: the regular module over its own
    endomorphism ring has hollow dimension equal to length(R / radical)."""
    caps = caps or active_caps()
    G = regular_cached(R, "left")
    if not (is_injective(G, caps) and is_cogenerator(G, caps)):
        return GeneratorDualityReport(R, "skipped", reason="regular module is not an injective cogenerator")
    try:
        GE, _, _ = module_over_endomorphisms(G, caps)
    except CapExceeded as exc:
        return GeneratorDualityReport(R, "skipped", reason=str(exc))
    from .dimension import length

    jac = jacobson_radical(R)
    QJ, _ = quotient_module(G, jac)
    qlen = length(QJ)
    hd = hollow_dimension(GE)[0]
    return GeneratorDualityReport(
        R,
        "verified" if hd == qlen else "failed",
        hdim_over_end=hd,
        quotient_length=qlen,
    )
