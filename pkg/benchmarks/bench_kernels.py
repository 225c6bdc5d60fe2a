#!/usr/bin/env python3
"""Compare the compiled arithmetic kernels against the pure-Python
fallback on the scan workloads the verifiers actually run.

Usage: python benchmarks/bench_kernels.py [--limit N] [--repeat R]
"""

import argparse
import time

from cleangraphs._kernels import backend, _pykernels

try:
    from cleangraphs._kernels import _ckernels
except ImportError:
    _ckernels = None


def timed(fn, *args):
    best = float("inf")
    for _ in range(ARGS.repeat):
        t0 = time.perf_counter()
        fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def scan_square_roots(impl, limit):
    for n in range(2, limit + 1):
        impl.count_square_roots_of_one(n)


def scan_units(impl, limit):
    for n in range(2, limit + 1):
        impl.count_units(n)


def scan_root_lists(impl, limit):
    # prime-power style workload: few moduli, large values
    for n in (limit * 97, limit * 128, limit * 211 + 1):
        impl.square_roots_of_one(n)


WORKLOADS = [
    ("count_square_roots_of_one, n = 2..limit", scan_square_roots),
    ("count_units, n = 2..limit", scan_units),
    ("square_roots_of_one on three moduli ~ 100*limit", scan_root_lists),
]


def main():
    print(f"active backend: {backend()}")
    if _ckernels is None:
        print("compiled kernels unavailable; timing pure Python only")
    for name, fn in WORKLOADS:
        py = timed(fn, _pykernels, ARGS.limit)
        line = f"{name:48s} pure={py:8.3f}s"
        if _ckernels is not None:
            cy = timed(fn, _ckernels, ARGS.limit)
            line += f"  compiled={cy:8.3f}s  speedup={py / cy:6.1f}x"
        print(line)


if __name__ == "__main__":
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--limit", type=int, default=3000)
    parser.add_argument("--repeat", type=int, default=3)
    ARGS = parser.parse_args()
    main()
