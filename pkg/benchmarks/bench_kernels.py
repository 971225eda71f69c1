"""Benchmark the halfspace-filter kernel: numba JIT vs pure numpy.

The workload mirrors real usage: dense zero-sum windows filtered by the
subset-sum inequalities of a polymatroid, one inequality per proper subset.
Run as a script; PERMUTOKIT_NUMBA=0 in the environment disables the JIT path
entirely, in which case only the numpy path is timed.

    python3 benchmarks/bench_kernels.py --sizes 5 6 7 --bound 4 --repeats 5

Memory note: the numpy path materializes an (N, 2^n - 2) product, so keep
n * bound modest (n=7, bound=4 needs ~0.5 GB).
"""
import argparse
import itertools
import time

import numpy as np

from permutokit._kernels import lattice_filter, use_numba, zero_sum_box


def subset_sum_system(n):
    # doubled, zero-centered permutohedron: z(A) = 2 * (sum of the |A|
    # largest of 1..n) - |A| * (n + 1), one row per proper nonempty subset
    desc = sorted(range(1, n + 1), reverse=True)
    rows, rhs = [], []
    for r in range(1, n):
        for idx in itertools.combinations(range(n), r):
            row = np.zeros(n, dtype=np.int64)
            row[list(idx)] = 1
            rows.append(row)
            rhs.append(2 * sum(desc[:r]) - r * (n + 1))
    return np.stack(rows), np.array(rhs, dtype=np.int64)


def time_path(cands, A, b, path, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        mask = lattice_filter(cands, A, b, force_path=path)
        best = min(best, time.perf_counter() - t0)
    return best, int(mask.sum())


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[5, 6, 7])
    ap.add_argument("--bound", type=int, default=4)
    ap.add_argument("--repeats", type=int, default=5)
    args = ap.parse_args()

    paths = ["numpy"] + (["numba"] if use_numba else [])
    if use_numba:
        # warm the JIT so compilation is not timed
        lattice_filter(
            np.zeros((1, 2), dtype=np.int64),
            np.eye(2, dtype=np.int64),
            np.zeros(2, dtype=np.int64),
            force_path="numba",
        )
    else:
        print("numba path disabled (not installed or PERMUTOKIT_NUMBA=0)")

    header = f"{'n':>3} {'rows':>10} {'constraints':>11} {'kept':>8}"
    header += "".join(f" {p + ' (ms)':>12}" for p in paths)
    if len(paths) == 2:
        header += f" {'speedup':>8}"
    print(header)
    for n in args.sizes:
        cands = np.asarray(zero_sum_box(n, args.bound))
        A, b = subset_sum_system(n)
        times, kept = {}, None
        for p in paths:
            times[p], kept = time_path(cands, A, b, p, args.repeats)
        line = f"{n:>3} {cands.shape[0]:>10} {A.shape[0]:>11} {kept:>8}"
        line += "".join(f" {times[p] * 1e3:>12.3f}" for p in paths)
        if len(paths) == 2:
            line += f" {times['numpy'] / times['numba']:>7.2f}x"
        print(line)


if __name__ == "__main__":
    main()
