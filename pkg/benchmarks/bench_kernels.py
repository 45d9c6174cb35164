"""Benchmark the compiled kernels against the pure-Python fallback.

Run:  python3 benchmarks/bench_kernels.py
"""

import time

from pbci.kernels import pure

try:
    from pbci.kernels import _native as native
except ImportError:
    native = None

from pbci.decomposition import builtin_example
from pbci.embedding import embed
from pbci.filters import all_prefilters
from pbci.lattice import from_closed_family
from pbci.structure import dihedral_group, group_to_algebra


def timeit(fn, repeat=1):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def workloads():
    ex6 = builtin_example()
    arrow, squig = ex6.flat_tables()
    yield ("pbci_ok x20000 (6 elements)",
           lambda k: [k.pbci_ok(arrow, squig, ex6.n, ex6.unit)
                      for _ in range(20000)],
           5)

    s = embed(ex6).structure
    leq, prod, resl, resr = s.flat_tables()
    yield ("residuation_ok x2000 (10 elements)",
           lambda k: [k.residuation_ok(leq, prod, resl, resr, s.n)
                      for _ in range(2000)],
           5)
    yield ("rpom3_ok x2000 (10 elements)",
           lambda k: [k.rpom3_ok(prod, resl, s.n) for _ in range(2000)],
           5)

    d4 = group_to_algebra(dihedral_group(4))
    lat = from_closed_family(all_prefilters(d4))
    join, meet = lat.flat_tables()
    yield ("arguesian_witness x20 (10-element lattice)",
           lambda k: [k.arguesian_witness(join, meet, lat.m)
                      for _ in range(20)],
           3)

    yield ("enumerate_tables n=3", lambda k: k.enumerate_tables(3, 2), 3)
    yield ("enumerate_tables n=4", lambda k: k.enumerate_tables(4, 3), 1)


def main():
    print(f"{'workload':<42} {'python':>10} {'c':>10} {'speedup':>9}")
    for name, fn, repeat in workloads():
        t_pure = timeit(lambda: fn(pure), repeat)
        if native is None:
            print(f"{name:<42} {t_pure:>9.4f}s {'n/a':>10} {'n/a':>9}")
            continue
        t_native = timeit(lambda: fn(native), repeat)
        ratio = t_pure / t_native if t_native > 0 else float("inf")
        print(f"{name:<42} {t_pure:>9.4f}s {t_native:>9.4f}s {ratio:>8.1f}x")
    if native is not None:
        blob_p = pure.enumerate_tables(4, 3)
        blob_n = native.enumerate_tables(4, 3)
        assert blob_p == blob_n, "backends disagree"
        print(f"\nbackends agree on n=4 enumeration ({len(blob_n)} raw models)")


if __name__ == "__main__":
    main()
