"""Compare the compiled and pure float kernels on identical workloads.

Two workload shapes matter in practice: wide batch evaluation (the
oracle's grid sweep) and the deeply sequential nested ternary refinement
(cheap per call, hot because every brute-force trial ends with one).

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from ftlocus import _kernels_py

try:
    from ftlocus import _kernels
except ImportError:
    _kernels = None

DIAMOND = (
    np.array([1.0, -1.0, 1.0, -1.0]),
    np.array([1.0, 1.0, -1.0, -1.0]),
)


def workloads():
    rng = np.random.default_rng(2024)
    sx, sy = rng.uniform(-8, 8, 8), rng.uniform(-8, 8, 8)
    px, py = rng.uniform(-12, 12, 250_000), rng.uniform(-12, 12, 250_000)
    dx, dy = DIAMOND
    return [
        (
            "batch objective, polygonal ball, 250k points x 8 sites",
            lambda impl: impl.objective_batch_poly(px, py, sx, sy, dx, dy),
        ),
        (
            "batch objective, L3 ball, 250k points x 8 sites",
            lambda impl: impl.objective_batch_lp(px, py, sx, sy, 3.0),
        ),
        (
            "nested ternary refine, polygonal ball, 90 iterations",
            lambda impl: impl.refine_nested_ternary_poly(
                -20.0, 20.0, -20.0, 20.0, 90, sx, sy, dx, dy
            ),
        ),
        (
            "nested ternary refine, L3 ball, 90 iterations",
            lambda impl: impl.refine_nested_ternary_lp(
                -20.0, 20.0, -20.0, 20.0, 90, sx, sy, 3.0
            ),
        ),
    ]


def best_of(fn, impl, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(impl)
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5, help="best-of-N timing")
    args = ap.parse_args()

    impls = [("pure", _kernels_py)]
    if _kernels is not None:
        impls.append(("compiled", _kernels))
    else:
        print("extension not built; timing the pure backend only")

    print("%-58s" % "workload", *("%12s" % name for name, _ in impls))
    for label, fn in workloads():
        row = ["%-58s" % label]
        timings = {}
        for name, impl in impls:
            timings[name] = best_of(fn, impl, args.repeat)
            row.append("%10.2fms" % (timings[name] * 1e3))
        if len(timings) == 2:
            row.append("  x%.1f" % (timings["pure"] / timings["compiled"]))
        print(*row)


if __name__ == "__main__":
    main()
