"""Benchmark the compiled kernels against the pure-Python fallback.

Usage: python benchmarks/bench_kernels.py [--quick]

Each workload runs on both backends through the same kernel API; the
table reports wall time per backend and the compiled speedup. Outputs are
also compared for equality, so this doubles as an equivalence check.
"""

import argparse
import time

from modlat import core
from modlat.kernels import backends


def _timed(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _workloads(quick: bool):
    z12 = core.cyclic_ring(12)
    m12 = core.regular_module(z12)
    q6, _ = core.quotient_module(m12, core.generated_mask(m12, [6]))
    big = core.direct_sum([m12, m12 if not quick else q6], ring=z12)
    mat = core.matrix_ring(core.cyclic_ring(2), 2)
    mreg = core.regular_module(mat)
    tri = core.triangular_ring(core.cyclic_ring(2), 2)
    treg = core.regular_module(tri)
    tsum = core.direct_sum([treg, treg], ring=tri)

    def lattice(module):
        def run(impl):
            t = impl.prepare(module.add, module.act, module.zero)
            return impl.all_submodule_masks(t, 10**6)

        return run

    def closures(module):
        def run(impl):
            t = impl.prepare(module.add, module.act, module.zero)
            out = []
            for x in range(module.order):
                for y in range(module.order // 2):
                    out.append(impl.closure_mask(t, (1 << x) | (1 << y)))
            return out

        return run

    def homs(src, dst, gens):
        def run(impl):
            ts = impl.prepare(src.add, src.act, src.zero)
            td = impl.prepare(dst.add, dst.act, dst.zero)
            return impl.enumerate_homs(ts, td, list(gens), 10**6)

        return run

    def table_checks(module):
        def run(impl):
            return (
                impl.assoc_violation(module.add),
                impl.act_module_add_violation(module.act, module.add),
            )

        return run

    out = [
        (f"lattice {big.name} ({big.order} elements)", lattice(big)),
        (f"lattice {tsum.name} ({tsum.order} elements)", lattice(tsum)),
        (f"lattice {mreg.name}", lattice(mreg)),
        (f"pair closures on {m12.name}", closures(m12)),
        (f"hom enumeration Hom({big.name}, {q6.name})", homs(big, q6, core.greedy_generators(big))),
        (f"hom enumeration End({q6.name})", homs(q6, q6, core.greedy_generators(q6))),
        (f"table axiom sweep on {big.name}", table_checks(big)),
    ]
    return out


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    impls = backends()
    if "compiled" not in impls:
        print("compiled kernels not available; benchmarking pure backend only")
    workloads = _workloads(args.quick)
    name_w = max(len(n) for n, _ in workloads)
    header = f"{'workload':{name_w}}  " + "".join(f"{n:>12}" for n in impls) + "     speedup"
    print(header)
    print("-" * len(header))
    for name, make in workloads:
        times = {}
        outputs = {}
        for impl_name, impl in impls.items():
            times[impl_name], outputs[impl_name] = _timed(lambda: make(impl), args.repeat)
        if len(outputs) == 2 and outputs["pure"] != outputs["compiled"]:
            raise SystemExit(f"backend outputs differ on: {name}")
        row = f"{name:{name_w}}  " + "".join(f"{times[n] * 1000:>10.1f}ms" for n in impls)
        if len(times) == 2:
            row += f"  {times['pure'] / max(times['compiled'], 1e-9):>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
