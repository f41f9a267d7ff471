"""The compiled and pure kernels must produce identical results in
identical order on every function of the shared API."""

import pytest

from modlat import core
from modlat.errors import CapExceeded
from modlat.kernels import backends

BACKENDS = backends()

pytestmark = pytest.mark.skipif(
    "compiled" not in BACKENDS, reason="compiled kernels not built"
)


def _sample_modules():
    out = []
    for n in (1, 4, 6, 12):
        out.append(core.regular_module(core.cyclic_ring(n)))
    T = core.triangular_ring(core.cyclic_ring(2), 2)
    out.append(core.regular_module(T))
    out.append(core.regular_module(T, "right"))
    Mx = core.matrix_ring(core.cyclic_ring(2), 2)
    out.append(core.regular_module(Mx))
    R2 = core.cyclic_ring(2)
    out.append(core.direct_sum([core.regular_module(R2)] * 3, ring=R2))
    return out


def _handles(M):
    return {
        name: impl.prepare(M.add, M.act, M.zero) for name, impl in BACKENDS.items()
    }


def test_masks_and_lattices_agree():
    for M in _sample_modules():
        hs = _handles(M)
        pure, comp = BACKENDS["pure"], BACKENDS["compiled"]
        tp, tc = hs["pure"], hs["compiled"]
        for x in range(M.order):
            assert pure.cyclic_mask(tp, x) == comp.cyclic_mask(tc, x)
        lat_p = pure.all_submodule_masks(tp, 10**5)
        lat_c = comp.all_submodule_masks(tc, 10**5)
        assert lat_p == lat_c
        for a in lat_p[: min(len(lat_p), 8)]:
            for b in lat_p[: min(len(lat_p), 8)]:
                assert pure.sum_mask(tp, a, b) == comp.sum_mask(tc, a, b)
        seed = (1 << M.zero) | (1 << (M.order - 1)) | (1 << (M.order // 2))
        assert pure.closure_mask(tp, seed) == comp.closure_mask(tc, seed)


def test_lattice_cap_agrees():
    M = core.regular_module(core.cyclic_ring(12))
    for impl in BACKENDS.values():
        t = impl.prepare(M.add, M.act, M.zero)
        with pytest.raises(CapExceeded):
            impl.all_submodule_masks(t, 3)


def test_hom_enumeration_agrees():
    M = core.regular_module(core.cyclic_ring(12))
    Q6, _ = core.quotient_module(M, core.generated_mask(M, [6]))
    D = core.direct_sum([Q6, Q6], ring=M.ring)
    cases = [(M, M, (1,)), (Q6, M, (1,)), (D, Q6, core.greedy_generators(D))]
    for src, dst, gens in cases:
        results = {}
        for name, impl in BACKENDS.items():
            t_src = impl.prepare(src.add, src.act, src.zero)
            t_dst = impl.prepare(dst.add, dst.act, dst.zero)
            results[name] = impl.enumerate_homs(t_src, t_dst, list(gens), 10**6)
        assert results["pure"] == results["compiled"]
        assert len(results["pure"]) > 0


def test_hom_cap_agrees():
    M = core.regular_module(core.cyclic_ring(12))
    for impl in BACKENDS.values():
        t = impl.prepare(M.add, M.act, M.zero)
        with pytest.raises(CapExceeded):
            impl.enumerate_homs(t, t, [1], 3)


def test_index_tables_agree():
    M = core.regular_module(core.cyclic_ring(6))
    pure, comp = BACKENDS["pure"], BACKENDS["compiled"]
    tp = pure.prepare(M.add, M.act, M.zero)
    rows = pure.enumerate_homs(tp, tp, [1], 10**4)
    rows = sorted(rows)
    assert pure.sum_index(rows, M.add) == comp.sum_index(rows, M.add)
    assert pure.compose_index(rows, rows, rows) == comp.compose_index(rows, rows, rows)


def test_validation_sweeps_agree():
    R = core.cyclic_ring(6)
    T = core.triangular_ring(core.cyclic_ring(2), 2)
    M = core.regular_module(T)
    pure, comp = BACKENDS["pure"], BACKENDS["compiled"]
    tables = [
        ("assoc_violation", (R.add,)),
        ("assoc_violation", (T.mul,)),
        ("commut_violation", (T.mul,)),
        ("commut_violation", (R.add,)),
        ("identity_violation", (R.mul, R.one)),
        ("missing_inverse", (R.add, R.zero)),
        ("distrib_violation", (T.add, T.mul)),
        ("act_scalar_add_violation", (M.act, T.add, M.add)),
        ("act_module_add_violation", (M.act, M.add)),
        ("act_assoc_violation", (M.act, T.mul, False)),
        ("act_unital_violation", (M.act, T.one)),
    ]
    for fn, args in tables:
        assert getattr(pure, fn)(*args) == getattr(comp, fn)(*args)


def test_validation_sweeps_find_same_witness():
    R = core.cyclic_ring(4)
    mul = [list(r) for r in R.mul]
    mul[2][2] = 1
    pure, comp = BACKENDS["pure"], BACKENDS["compiled"]
    vp = pure.assoc_violation(mul)
    vc = comp.assoc_violation(mul)
    assert vp == vc and vp is not None
    add = [list(r) for r in R.add]
    add[1][2] = 0
    assert pure.commut_violation(add) == comp.commut_violation(add) is not None
