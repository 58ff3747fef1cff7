"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--n 24] [--samples 20]

Both backends are imported directly, so the comparison does not depend on
which one ``graphpoly`` picked at import.
"""

from __future__ import annotations

import argparse
import time
from fractions import Fraction

from graphpoly import _pykernels
from graphpoly.graph import all_labelled_graphs, random_gnp

try:
    from graphpoly import _ckernels
except ImportError:  # extension not built
    _ckernels = None


def best_of(repeat: int, fn) -> float:
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def workloads(n: int, samples: int):
    half = Fraction(1, 2)
    hosts = [random_gnp(n, half, 1, i) for i in range(samples)]
    small = list(all_labelled_graphs(6))
    mid = [random_gnp(16, half, 2, i) for i in range(samples)]

    def canon(k):
        for g in small:
            k.canonical_perm(g.n, g.rows)

    def hereditary(kind):
        def run(k):
            for g in hosts:
                k.hereditary_counts(g.n, g.rows, kind)
        return run

    def downset(kind, graphs):
        def run(k):
            for g in graphs:
                k.downset_counts(g.n, g.rows, kind)
        return run

    def brute(k):
        for g in mid:
            k.brute_counts(g.n, g.rows, k.CLUSTER)

    family = [(3, [2, 5, 2])]  # P_3

    def forbidden(k):
        for g in hosts:
            k.hereditary_counts(g.n, g.rows, k.FORBIDDEN, family)

    py = _pykernels
    return [
        (f"canonical labelling, all {len(small)} labelled 6-vertex graphs", canon),
        (f"forest DFS, {samples} x G({n}, 1/2)", hereditary(py.FOREST)),
        (f"cluster DFS, {samples} x G({n}, 1/2)", hereditary(py.CLUSTER)),
        (f"Forb(P3) DFS, {samples} x G({n}, 1/2)", forbidden),
        (f"dominating downset, {samples} x G({n}, 1/2)", downset(py.DOM, hosts)),
        (f"zero-forcing downset, {samples} x G(16, 1/2)", downset(py.ZF, mid)),
        (f"brute cluster scan, {samples} x G(16, 1/2)", brute),
    ]


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--n", type=int, default=24)
    parser.add_argument("--samples", type=int, default=20)
    args = parser.parse_args(argv)

    if _ckernels is None:
        print("compiled kernels are not built; only the Python timings are shown")
    print(f"{'workload':<58} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for label, fn in workloads(args.n, args.samples):
        t_py = best_of(args.repeat, lambda: fn(_pykernels))
        if _ckernels is None:
            print(f"{label:<58} {t_py:>10.4f}")
            continue
        t_c = best_of(args.repeat, lambda: fn(_ckernels))
        print(f"{label:<58} {t_py:>10.4f} {t_c:>10.4f} {t_py / max(t_c, 1e-9):>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
