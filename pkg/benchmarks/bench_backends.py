#!/usr/bin/env python3
"""Throughput comparison of the numba and numpy correlation-sum backends.

The fused pair-scan kernel dominates the analysis pipeline (one raw pass
plus one per surrogate, per series), so this is the number that matters.

Usage: python benchmarks/bench_backends.py [--lengths 1000,3000,6000] [--repeat 5]
"""

import argparse
import time

import numpy as np

from effindex import _kernels


def best_of(fn, repeat, *args):
    timings = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        timings.append(time.perf_counter() - start)
    return min(timings)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--lengths", default="1000,3000,6000")
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--m", type=int, default=2)
    args = parser.parse_args()
    lengths = [int(s) for s in args.lengths.split(",")]

    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not importable; nothing to compare")

    rng = np.random.default_rng(0)
    print(f"fused ApEn counts, m={args.m}, r=0.2*sd, best of {args.repeat}")
    print(f"{'T':>7} {'numba':>12} {'numpy':>12} {'speedup':>9}")
    # warm the JIT outside the timed region
    warm = rng.standard_normal(256)
    _kernels._numba_apen_counts(warm, args.m, 0.2)
    for length in lengths:
        x = np.ascontiguousarray(rng.standard_normal(length))
        r = 0.2 * x.std(ddof=1)
        nb = best_of(_kernels._numba_apen_counts, args.repeat, x, args.m, r)
        np_t = best_of(_kernels._numpy_apen_counts, args.repeat, x, args.m, r)
        a, b = _kernels._numba_apen_counts(x, args.m, r), _kernels._numpy_apen_counts(x, args.m, r)
        assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
        print(f"{length:>7} {nb * 1e3:>10.2f}ms {np_t * 1e3:>10.2f}ms {np_t / nb:>8.1f}x")


if __name__ == "__main__":
    main()
