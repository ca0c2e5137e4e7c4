#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python twins.

Two workloads, both straight from the deciders' inner loops:
  * ddf: factorization degree patterns of random monic polynomials modulo
    21-bit primes (one call per sampling trial of every certifier);
  * rank: row rank of dense integer matrices modulo a 62-bit prime (tier-1
    of the Burnside irreducibility loop).

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time
from random import Random

from zdense import _kernel_py
from zdense.modular import is_prime

try:
    from zdense import _kernel_cy
except ImportError:
    _kernel_cy = None


def make_ddf_workload(rng, count=400, degree=8):
    primes = []
    while len(primes) < 40:
        candidate = rng.randrange(1 << 20, 1 << 21)
        if is_prime(candidate):
            primes.append(candidate)
    jobs = []
    while len(jobs) < count:
        coeffs = [rng.randrange(-(10**6), 10**6) for _ in range(degree)] + [1]
        q = primes[len(jobs) % len(primes)]
        try:
            _kernel_py.ddf_degrees(coeffs, q)
        except ValueError:
            continue
        jobs.append((coeffs, q))
    return jobs


def make_rank_workload(rng, count=30, size=100):
    p = (1 << 61) - 1
    jobs = []
    for _ in range(count):
        rows = [
            [rng.randrange(-(10**18), 10**18) for _ in range(size)]
            for _ in range(size)
        ]
        jobs.append((rows, p))
    return jobs


def time_backend(label, fn, jobs, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for args in jobs:
            fn(*args)
        best = min(best, time.perf_counter() - t0)
    print(f"  {label:8s} {best * 1000:10.1f} ms")
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = Random(12345)
    ddf_jobs = make_ddf_workload(rng)
    rank_jobs = make_rank_workload(rng)

    print(f"ddf_degrees: {len(ddf_jobs)} degree-8 polynomials, 21-bit primes")
    py = time_backend("python", _kernel_py.ddf_degrees, ddf_jobs, args.repeat)
    if _kernel_cy is not None:
        cy = time_backend("cython", _kernel_cy.ddf_degrees, ddf_jobs, args.repeat)
        print(f"  speedup  {py / cy:10.1f}x")
    else:
        print("  cython   (not built)")

    print(f"rank_mod: {len(rank_jobs)} matrices 100x100, 61-bit prime")
    py = time_backend("python", _kernel_py.rank_mod, rank_jobs, args.repeat)
    if _kernel_cy is not None:
        cy = time_backend("cython", _kernel_cy.rank_mod, rank_jobs, args.repeat)
        print(f"  speedup  {py / cy:10.1f}x")
    else:
        print("  cython   (not built)")


if __name__ == "__main__":
    main()
