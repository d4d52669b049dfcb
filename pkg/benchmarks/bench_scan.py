#!/usr/bin/env python3
"""Benchmark the denominator-scan kernels: compiled extension vs pure Python.

The scan is the hot loop of the enumerative solver; this script times both
backends on representative targets and prints the speedup.  Works without the
compiled kernel (it then reports the pure backend only).

Usage: python benchmarks/bench_scan.py [--repeat N]
"""

import argparse
import time

from selfpower import denominator_bound, minimal_polynomial_of_self_power
from selfpower._backend import BACKEND, scan_denominators

WORKLOADS = [
    # (a, b) whose minimal polynomial drives the scan; n_mult as in the solver
    ("minpoly(1, 40), degree 40", 1, 40, 1),
    ("minpoly(1, 37), degree 37", 1, 37, 1),
    ("minpoly(8, 27), degree 9", 8, 27, 1),
    ("minpoly(3, 32), degree 32", 3, 32, 1),
]


def run(force, d, n_mult, b_hi, r, s, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        hits, tested = scan_denominators(d, n_mult, 2, b_hi, r, s, force=force)
        best = min(best, time.perf_counter() - t0)
    return best, hits, tested


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["pure"] if BACKEND == "pure" else ["pure", "compiled"]
    print(f"selected backend at import: {BACKEND}")
    header = f"{'workload':34} {'tested':>9} " + "".join(
        f"{name:>12}" for name in backends
    )
    print(header + ("     speedup" if len(backends) == 2 else ""))
    for label, a, b, n_mult in WORKLOADS:
        binomial = minimal_polynomial_of_self_power(a, b)
        b_hi = denominator_bound(binomial.d)
        times = {}
        tested = hits = None
        for name in backends:
            times[name], hits, tested = run(
                name, binomial.d, n_mult, b_hi, binomial.r, binomial.s, args.repeat
            )
        row = f"{label:34} {tested:>9} " + "".join(
            f"{times[name] * 1000:>10.1f}ms" for name in backends
        )
        if len(backends) == 2:
            row += f" {times['pure'] / times['compiled']:>10.1f}x"
        print(row + f"   hits={hits}")


if __name__ == "__main__":
    main()
