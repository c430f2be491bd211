#!/usr/bin/env python3
"""Benchmark the straightening kernels against each other.

Builds seeded random generator words and times full normal-form products
under the pure-Python kernel and the compiled one, then prints a table with
the speedup. The two runs use identical inputs, and the resulting elements
are compared term-by-term so the benchmark doubles as a parity check.

Usage:
    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --ranks 4 6 8 --degree 6 --products 40
"""

from __future__ import annotations

import argparse
import random
import time

from uqson.pbw import active_kernel, available_kernels, use_kernel
from uqson.pbw.fuzz import random_monomial


def build_inputs(n: int, degree: int, products: int, seed: int):
    rng = random.Random(seed)
    return [
        (random_monomial(rng, n, degree), random_monomial(rng, n, degree))
        for _ in range(products)
    ]


def time_kernel(name: str, inputs) -> tuple[float, list]:
    use_kernel(name)
    results = []
    t0 = time.perf_counter()
    for a, b in inputs:
        results.append(a * b)
    return time.perf_counter() - t0, results


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--ranks", type=int, nargs="+", default=[4, 6, 8])
    parser.add_argument("--degree", type=int, default=6)
    parser.add_argument("--products", type=int, default=30)
    parser.add_argument("--seed", type=int, default=1729)
    args = parser.parse_args()

    kernels = available_kernels()
    if "cython" not in kernels:
        print("compiled kernel unavailable; timing the python kernel only")

    before = active_kernel()
    header = f"{'rank':>4}  {'degree':>6}  {'products':>8}  {'python':>10}"
    if "cython" in kernels:
        header += f"  {'cython':>10}  {'speedup':>7}"
    print(header)
    try:
        for n in args.ranks:
            inputs = build_inputs(n, args.degree, args.products, args.seed)
            t_py, r_py = time_kernel("python", inputs)
            row = f"{n:>4}  {args.degree:>6}  {args.products:>8}  {t_py:>9.3f}s"
            if "cython" in kernels:
                t_cy, r_cy = time_kernel("cython", inputs)
                if any(a._terms != b._terms for a, b in zip(r_py, r_cy)):
                    print("kernel outputs disagree; aborting")
                    return 1
                row += f"  {t_cy:>9.3f}s  {t_py / t_cy:>6.2f}x"
            print(row)
    finally:
        use_kernel(before)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
