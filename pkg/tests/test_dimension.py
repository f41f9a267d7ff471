import itertools

from modlat import core, dimension as dim, lattice as lt
from conftest import gen_sub, sub_of


def max_coindependent_over_all_nodes(M):
    # oracle for the hollow dimension: exhaustive search over families of
    # arbitrary proper submodules, not just maximal ones
    lat = lt.submodule_lattice(M)
    proper = [m for m in lat.node_masks if m != lat.full_mask]
    best = 0
    subs = [core.Submodule(M, m) for m in proper]

    def extend(start, family):
        nonlocal best
        best = max(best, len(family))
        for i in range(start, len(subs)):
            cand = family + [subs[i]]
            if lt.is_coindependent(M, cand):
                extend(i + 1, cand)

    extend(0, [])
    return best


def max_independent_atoms(M):
    # oracle for the uniform dimension: largest independent family of
    # nonzero submodules; shrinking members to atoms loses no generality
    lat = lt.submodule_lattice(M)
    atoms = lat.minimal_masks
    zero = lat.zero_mask
    best = 0

    def extend(start, count, acc):
        nonlocal best
        best = max(best, count)
        for i in range(start, len(atoms)):
            if (atoms[i] & acc) == zero:
                extend(i + 1, count + 1, lat.join_masks(acc, atoms[i]))

    extend(0, 0, zero)
    return best


def all_maximal_chain_lengths(M):
    lat = lt.submodule_lattice(M)
    lengths = set()

    def walk(cur, steps):
        if cur == lat.full_mask:
            lengths.add(steps)
            return
        ups = [m for m in lat.node_masks if m != cur and cur | m == m]
        covers = [
            m
            for m in ups
            if not any(o != cur and o != m and cur | o == o and o | m == m for o in ups)
        ]
        for c in covers:
            walk(c, steps + 1)

    walk(lat.zero_mask, 0)
    return lengths


SMALL_MODULE_BUILDERS = []


def _small_modules():
    mods = []
    for n in (1, 2, 4, 6, 8, 12):
        mods.append(core.regular_module(core.cyclic_ring(n)))
    R2 = core.cyclic_ring(2)
    mods.append(core.direct_sum([core.regular_module(R2)] * 2, ring=R2))
    T = core.triangular_ring(core.cyclic_ring(2), 2)
    mods.append(core.regular_module(T))
    mods.append(core.regular_module(T, "right"))
    Mx = core.matrix_ring(core.cyclic_ring(2), 2)
    mods.append(core.regular_module(Mx))
    R4 = core.cyclic_ring(4)
    M4 = core.regular_module(R4)
    Z2, _ = core.quotient_module(M4, core.generated_mask(M4, [2]))
    mods.append(core.direct_sum([Z2, M4]))
    return mods


def test_radical_and_socle_examples(m12):
    assert sorted(dim.radical(m12).members()) == [0, 6]
    assert sorted(dim.socle(m12).members()) == [0, 2, 4, 6, 8, 10]
    M8 = core.regular_module(core.cyclic_ring(8))
    assert sorted(dim.radical(M8).members()) == [0, 2, 4, 6]
    assert sorted(dim.socle(M8).members()) == [0, 4]


def test_radical_socle_of_semisimple_and_zero(z12):
    Z6, _ = core.quotient_module(
        core.regular_module(z12), core.generated_mask(core.regular_module(z12), [6])
    )
    M6 = core.module_from_spec(
        z12, {"kind": "quotient", "of": {"kind": "regular", "side": "left"}, "by": [6]}
    )
    assert dim.radical(M6).mask == 1 << M6.zero
    assert dim.socle(M6).mask == M6.full_mask()
    Z = core.direct_sum([], ring=z12)
    assert dim.radical(Z).mask == dim.socle(Z).mask == 1


def test_semisimplicity(m12, z12):
    assert not dim.is_semisimple(m12)
    M6 = core.module_from_spec(
        z12, {"kind": "quotient", "of": {"kind": "regular", "side": "left"}, "by": [6]}
    )
    assert dim.is_semisimple(M6)
    M4 = core.regular_module(core.cyclic_ring(4))
    assert not dim.is_semisimple(M4)
    assert dim.is_semisimple(core.direct_sum([], ring=z12))


def test_length_examples(m12, tri2):
    assert dim.length(m12) == 3
    assert dim.length(core.regular_module(tri2)) == 3
    simple, _ = core.quotient_module(m12, core.generated_mask(m12, [2]))
    assert dim.length(simple) == 1


def test_length_matches_all_maximal_chains():
    for M in _small_modules():
        lengths = all_maximal_chain_lengths(M)
        assert len(lengths) == 1
        assert dim.length(M) == lengths.pop()


def test_uniform_dimension_examples(m12):
    u, family = dim.uniform_dimension(m12)
    assert u == 2
    assert {sorted(s.members())[1] for s in family} == {4, 6}  # atoms {0,6} and {0,4,8}
    M8 = core.regular_module(core.cyclic_ring(8))
    assert dim.uniform_dimension(M8)[0] == 1
    assert dim.uniform_dimension(core.direct_sum([], ring=m12.ring))[0] == 0


def test_udim_against_independent_family_oracle():
    for M in _small_modules():
        assert dim.uniform_dimension(M)[0] == max_independent_atoms(M)


def test_hollow_dimension_examples(m12, tri2, mat2):
    h, decomp = dim.hollow_dimension(m12)
    assert h == 2
    assert {frozenset(s.members()) for s in decomp.family} == {
        frozenset({0, 2, 4, 6, 8, 10}),
        frozenset({0, 3, 6, 9}),
    }
    assert sorted(decomp.intersection.members()) == [0, 6]
    assert all(decomp.quotient_hollow)
    assert dim.hollow_dimension(core.regular_module(core.cyclic_ring(4)))[0] == 1
    assert dim.hollow_dimension(core.regular_module(tri2))[0] == 2
    assert dim.hollow_dimension(core.regular_module(mat2))[0] == 2


def test_hdim_against_full_lattice_oracle():
    for M in _small_modules():
        assert dim.hollow_dimension(M)[0] == max_coindependent_over_all_nodes(M)


def test_hollow_uniform_flags(m12):
    M8 = core.regular_module(core.cyclic_ring(8))
    assert dim.is_hollow(M8) and dim.is_uniform(M8)
    M6 = core.regular_module(core.cyclic_ring(6))
    assert not dim.is_hollow(M6) and not dim.is_uniform(M6)
    Z = core.direct_sum([], ring=m12.ring)
    assert not dim.is_hollow(Z) and not dim.is_uniform(Z)


def test_zero_module_conventions(z12):
    Z = core.direct_sum([], ring=z12)
    assert dim.length(Z) == 0
    assert dim.uniform_dimension(Z)[0] == 0
    assert dim.hollow_dimension(Z)[0] == 0
    assert dim.is_semisimple(Z)


def test_camps_dicks_examples(m12):
    assert dim.camps_dicks_d(m12, core.Submodule(m12, m12.full_mask())) == 0
    assert dim.camps_dicks_d(m12, sub_of(m12, [0])) == 2
    assert dim.camps_dicks_d(m12, gen_sub(m12, [2])) == 1


def test_d_axioms(m12):
    assert dim.verify_d_axioms(m12) is None
    for M in _small_modules():
        assert dim.verify_d_axioms(M) is None


def test_d_axioms_spot_pair(m12):
    d2 = dim.camps_dicks_d(m12, gen_sub(m12, [2]))
    d3 = dim.camps_dicks_d(m12, gen_sub(m12, [3]))
    d6 = dim.camps_dicks_d(m12, gen_sub(m12, [6]))
    assert d6 == d2 + d3 == 2


def test_hdim_monotone_and_small_invariant(m12):
    lat = lt.submodule_lattice(m12)
    d = dim.d_values(m12)
    h = d[lat.zero_mask]
    assert all(v <= h for v in d.values())
    for mask in lat.node_masks:
        if lt.is_small_mask(lat, mask):
            assert d[mask] == h


def test_additivity_over_direct_sums(z12):
    m = core.regular_module(z12)
    quotients = []
    for g in (0, 6, 4, 3, 2, 1):
        Q, _ = core.quotient_module(m, core.generated_mask(m, [g]))
        quotients.append(Q)
    for a, b in itertools.combinations(quotients, 2):
        D = core.direct_sum([a, b], ring=z12)
        assert dim.hollow_dimension(D)[0] == dim.hollow_dimension(a)[0] + dim.hollow_dimension(b)[0]
        assert dim.uniform_dimension(D)[0] == dim.uniform_dimension(a)[0] + dim.uniform_dimension(b)[0]


def test_descending_chain_stabilization(m12):
    # along every strictly descending chain there is a tail index from which
    # the earlier term is small modulo each later term
    lat = lt.submodule_lattice(m12)

    def chains(cur, acc):
        downs = [m for m in lat.node_masks if m != cur and m | cur == cur]
        covers = [
            m
            for m in downs
            if not any(o != cur and o != m and m | o == o and o | cur == cur for o in downs)
        ]
        if not covers:
            yield acc
        for c in covers:
            yield from chains(c, acc + [c])

    for chain in chains(lat.full_mask, []):
        found = None
        for i in range(len(chain)):
            if all(
                _small_in_quotient(m12, chain[i], chain[j]) for j in range(i, len(chain))
            ):
                found = i
                break
        assert found is not None


def _small_in_quotient(M, upper, lower):
    Q, proj = core.quotient_module(M, core.Submodule(M, lower))
    return lt.is_small_mask(lt.submodule_lattice(Q), proj.map_mask(upper))


def test_dimension_profile_serialization(m12):
    profile = dim.dimension_profile(m12)
    data = profile.to_dict()
    assert data["hdim"] == data["udim"] == 2
    assert data["length"] == 3
    assert data["radical"] == [0, 6]
    assert not data["hollow"] and not data["uniform"] and not data["semisimple"]
