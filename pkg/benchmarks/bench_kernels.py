#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times the three float-mode hot kernels (max-plus matmul, Floyd-Warshall
closure, Karp table) on dense random log matrices, plus the end-to-end
strict-visualization pipeline, and reports the empirical scaling
exponent between the two largest sizes.

Run:  python benchmarks/bench_kernels.py [--sizes 100,200,400] [--repeat 3]
"""

import argparse
import math
import time

import numpy as np

from maxvis._kernels import _fallback

try:
    from maxvis._kernels import _core
except ImportError:
    _core = None


def timeit(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_kernels(sizes, repeat):
    rng = np.random.default_rng(1234)
    backends = [("numpy", _fallback)] + ([("compiled", _core)] if _core else [])
    print("%-8s %-10s %8s %12s" % ("kernel", "backend", "n", "seconds"))
    results = {}
    for n in sizes:
        a = np.log(rng.uniform(0.1, 10.0, size=(n, n)))
        b = np.log(rng.uniform(0.1, 10.0, size=(n, n)))
        d = a - _fallback.karp_lambda(a)  # definite: closure converges
        for name, impl in backends:
            t = timeit(lambda: impl.maxplus_matmul(np.ascontiguousarray(a),
                                                   np.ascontiguousarray(b)), repeat)
            print("%-8s %-10s %8d %12.4f" % ("matmul", name, n, t))
            t = timeit(lambda: impl.fw_closure(d.copy()), repeat)
            print("%-8s %-10s %8d %12.4f" % ("closure", name, n, t))
            t = timeit(lambda: impl.karp_lambda(np.ascontiguousarray(a)), repeat)
            print("%-8s %-10s %8d %12.4f" % ("karp", name, n, t))
            results[(name, n)] = t
    return results


def bench_pipeline(sizes, repeat):
    from maxvis import (check_visualization, diag_similarity,
                        strict_visualizer)
    from maxvis.semiring import FLOAT, MaxMatrix

    print()
    print("%-10s %8s %12s" % ("pipeline", "n", "seconds"))
    times = {}
    rng = np.random.default_rng(99)
    for n in sizes:
        lin = rng.uniform(0.1, 10.0, size=(n, n))
        a = MaxMatrix.from_rows(lin.tolist(), mode=FLOAT)

        def run():
            x = strict_visualizer(a, "column_sum")
            report = check_visualization(diag_similarity(a, x))
            assert report.status == "strictly_visualized"

        times[n] = timeit(run, repeat)
        print("%-10s %8d %12.4f" % ("visualize", n, times[n]))
    if len(sizes) >= 2:
        n1, n2 = sizes[-2], sizes[-1]
        exponent = math.log(times[n2] / times[n1]) / math.log(n2 / n1)
        print("empirical scaling exponent (%d -> %d): %.2f" % (n1, n2, exponent))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sizes", default="100,200,400")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    import maxvis

    print("active kernel backend: %s" % maxvis.KERNEL_BACKEND)
    if _core is None:
        print("compiled kernels not built; benchmarking the fallback only")
    bench_kernels(sizes, args.repeat)
    bench_pipeline(sizes, args.repeat)


if __name__ == "__main__":
    main()
