import itertools

import pytest

from modlat import core, dimension as dim, endo, lattice as lt
from modlat.config import Caps
from modlat.errors import CapExceeded, PreconditionError
from conftest import gen_sub


@pytest.fixture(scope="module")
def z6_mod(m12):
    Q, _ = core.quotient_module(m12, gen_sub(m12, [6]).mask)
    return Q


@pytest.fixture(scope="module")
def z4_mod(m12):
    Q, _ = core.quotient_module(m12, gen_sub(m12, [4]).mask)
    return Q


@pytest.fixture(scope="module")
def z2z4():
    R4 = core.cyclic_ring(4)
    M4 = core.regular_module(R4)
    Z2, _ = core.quotient_module(M4, core.generated_mask(M4, [2]))
    return core.direct_sum([Z2, M4])


def brute_force_hom_count(M, N):
    # oracle: filter all |N|^|M| maps; tiny modules only
    assert N.order ** M.order <= 200_000
    count = 0
    for images in itertools.product(range(N.order), repeat=M.order):
        if all(
            images[M.add[a][b]] == N.add[images[a]][images[b]]
            for a in range(M.order)
            for b in range(M.order)
        ) and all(
            images[M.act[r][a]] == N.act[r][images[a]]
            for r in range(M.ring.order)
            for a in range(M.order)
        ):
            count += 1
    return count


def test_hom_set_counts(m12, z6_mod):
    assert len(endo.hom_set(z6_mod, m12)) == 6
    zero = core.direct_sum([], ring=m12.ring)
    assert len(endo.hom_set(m12, zero)) == 1
    R6 = core.cyclic_ring(6)
    M6 = core.regular_module(R6)
    Z2, _ = core.quotient_module(M6, core.generated_mask(M6, [2]))
    Z3, _ = core.quotient_module(M6, core.generated_mask(M6, [3]))
    assert len(endo.hom_set(Z3, Z2)) == 1  # coprime orders: zero map only


def test_hom_set_against_brute_force(m12, z6_mod, z4_mod):
    for M, N in [(z6_mod, z4_mod), (z4_mod, z6_mod), (z6_mod, z6_mod)]:
        assert len(endo.hom_set(M, N)) == brute_force_hom_count(M, N)
    T = core.triangular_ring(core.cyclic_ring(2), 2)
    MT = core.regular_module(T)
    J, _ = core.quotient_module(MT, core.generated_mask(MT, [2]))
    assert len(endo.hom_set(J, J)) == brute_force_hom_count(J, J)


def test_hom_set_maps_validate(z6_mod, z4_mod):
    for h in endo.hom_set(z6_mod, z4_mod).maps:
        assert core.validate(h) == []


def test_hom_cap(m12):
    with pytest.raises(CapExceeded):
        endo.hom_set(m12, m12, cap_override=5)


def test_endomorphism_ring_of_z4(z4_mod):
    E, homs = endo.endomorphism_ring(z4_mod)
    assert E.order == 4
    assert core.validate(E) == []
    # ring-isomorphic to the integers mod 4: match tables under the map
    # sending each endomorphism to its value at the generator
    Z4 = core.cyclic_ring(4)
    gen = core.greedy_generators(z4_mod)[0]
    relabel = {i: homs.maps[i].images[gen] for i in range(4)}
    for a in range(4):
        for b in range(4):
            assert relabel[E.add[a][b]] == Z4.add[relabel[a]][relabel[b]]
            assert relabel[E.mul[a][b]] == Z4.mul[relabel[a]][relabel[b]]


def test_end_of_simple_is_division_ring(m12):
    S, _ = core.quotient_module(m12, gen_sub(m12, [2]).mask)
    E, _ = endo.endomorphism_ring(S)
    assert E.order == 2
    for a in range(E.order):
        if a != E.zero:
            assert any(E.mul[a][b] == E.one for b in range(E.order))


def test_end_of_zero_module(m12):
    Z = core.direct_sum([], ring=m12.ring)
    E, _ = endo.endomorphism_ring(Z)
    assert E.order == 1


def test_self_projectivity(m12, z4_mod, z2z4):
    assert endo.is_self_projective(z4_mod)[0]
    assert endo.is_self_projective(m12)[0]
    simple, _ = core.quotient_module(m12, gen_sub(m12, [2]).mask)
    assert endo.is_self_projective(simple)[0]
    flag, witness = endo.is_self_projective(z2z4)
    assert not flag
    assert witness is not None and core.validate(witness) == []
    # the witness hom really does not lift
    endos = endo.hom_set(z2z4, z2z4)
    lat = lt.submodule_lattice(z2z4)
    Qs = {}
    target = witness.target
    induced = set()
    for mask in lat.node_masks:
        Q, proj = core.quotient_module(z2z4, core.Submodule(z2z4, mask))
        if Q.order == target.order and Q.add == target.add and Q.act == target.act:
            induced |= {tuple(proj.images[v] for v in h.images) for h in endos.maps}
    assert witness.images not in induced


def test_takeuchi_reports(m12, z4_mod, z2z4, tri2, mat2):
    rep = endo.verify_takeuchi(m12)
    assert rep.status == "verified" and rep.hdim_module == rep.hdim_end == 2
    assert rep.cover_ok
    rep4 = endo.verify_takeuchi(z4_mod)
    assert rep4.status == "verified" and rep4.hdim_module == 1
    rep_skip = endo.verify_takeuchi(z2z4)
    assert rep_skip.status == "skipped" and rep_skip.reason == "not self-projective"
    assert rep_skip.witness is not None
    for R in (tri2, mat2):
        r = endo.verify_takeuchi(core.regular_module(R))
        assert r.status == "verified" and r.hdim_module == r.hdim_end == 2


def test_takeuchi_cap_skip(m12):
    small = Caps(max_end_ring=4)
    rep = endo.verify_takeuchi(m12, small)
    assert rep.status == "skipped" and "cap" in rep.reason


def test_injectivity(m12, z4_mod):
    assert endo.is_injective(m12)  # self-injective
    R4 = core.cyclic_ring(4)
    M4 = core.regular_module(R4)
    Z2, _ = core.quotient_module(M4, core.generated_mask(M4, [2]))
    assert not endo.is_injective(Z2)
    zero_over_unit = core.direct_sum([], ring=core.cyclic_ring(1))
    assert endo.is_injective(zero_over_unit)
    # the full 2-power part of Z/12 is injective over it (but Z/2 is not)
    assert endo.is_injective(z4_mod)
    Z2_12, _ = core.quotient_module(
        core.regular_module(m12.ring), core.generated_mask(core.regular_module(m12.ring), [2])
    )
    assert not endo.is_injective(Z2_12)


def test_cogenerator(m12, z4_mod):
    assert endo.is_cogenerator(m12)
    assert not endo.is_cogenerator(z4_mod)  # misses the 3-element simple


def test_page_duality(m12, z6_mod, z4_mod):
    rep = endo.verify_page(z6_mod, m12)
    assert rep.status == "verified" and rep.hdim_module == rep.udim_homs == 2
    assert rep.hom_count == 6
    rep_reg = endo.verify_page(m12, m12)
    assert rep_reg.status == "verified" and rep_reg.hdim_module == 2
    zero = core.direct_sum([], ring=m12.ring)
    rep_zero = endo.verify_page(zero, m12)
    assert rep_zero.status == "verified" and rep_zero.hdim_module == 0
    with pytest.raises(PreconditionError):
        endo.verify_page(z6_mod, z4_mod)  # Q not an injective cogenerator


def test_page_bimodule_is_valid_right_module(m12, z6_mod):
    view = endo.hom_module_over_end(z6_mod, m12)
    assert view.module.side == "right"
    assert core.validate(view.module) == []
    assert view.ring.order == 12


def test_good_module(m12, z6_mod):
    rep = endo.verify_good_module(m12, z6_mod)
    assert rep.ok and rep.checked == rep.total == 6
    # the natural projection maps the radical onto the (zero) radical
    rep2 = endo.verify_good_module(z6_mod, m12)
    assert rep2.ok


def test_generator_duality(z12, tri2):
    rep = endo.verify_generator_duality(z12)
    assert rep.status == "verified" and rep.hdim_over_end == rep.quotient_length == 2
    rep_t = endo.verify_generator_duality(tri2)
    assert rep_t.status == "skipped"


def test_module_over_endomorphisms_is_valid(m12):
    GE, E, _ = endo.module_over_endomorphisms(m12)
    assert core.validate(GE) == []
    assert GE.side == "right" and E.order == 12
    assert dim.hollow_dimension(GE)[0] == 2
