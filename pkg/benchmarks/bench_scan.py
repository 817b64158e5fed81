#!/usr/bin/env python3
"""Benchmark the compiled scan kernel against the pure-Python twin.

Runs the full candidate scan for a range of n_max values on both
backends, asserts the survivor lists are identical, and prints the
timings with the speedup factor.

Usage: python benchmarks/bench_scan.py [--n-max N] [--repeat K]
"""

import argparse
import time

from quadrocubic import scan as pyscan

try:
    from quadrocubic import _scan as cyscan
except ImportError:
    cyscan = None


def _time(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=200)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if cyscan is None:
        raise SystemExit("compiled kernel not built; nothing to compare")

    print(f"{'n_max':>6} {'python':>12} {'cython':>12} {'speedup':>8}")
    for n_max in (50, 100, args.n_max):
        t_py, r_py = _time(lambda: pyscan.scan_chunk(4, n_max), args.repeat)
        t_cy, r_cy = _time(lambda: cyscan.scan_chunk(4, n_max), args.repeat)
        assert r_py == r_cy, f"backends disagree at n_max={n_max}"
        print(f"{n_max:>6} {t_py * 1e3:>10.2f}ms {t_cy * 1e3:>10.2f}ms "
              f"{t_py / t_cy:>7.1f}x")
    print(f"survivors at n_max={args.n_max}: {r_py}")


if __name__ == "__main__":
    main()
