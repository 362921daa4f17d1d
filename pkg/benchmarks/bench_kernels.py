#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Run:  python benchmarks/bench_kernels.py [--repeats N]

Times the three hot kernels on representative sizes plus one end-to-end
Wootters evaluation, for every available backend.
"""

import argparse
import time

import numpy as np

from trineq import kernels
from trineq.concurrence import wootters_concurrence
from trineq.sampling import random_rank2_ensemble
from trineq.states import BipartiteShape, density_from_ensemble


def timeit(fn, repeats):
    fn()  # warm up
    t0 = time.perf_counter()
    for _ in range(repeats):
        fn()
    return (time.perf_counter() - t0) / repeats


def bench_backend(name, repeats, rng):
    k = kernels.get_backend(name)
    rows = []

    for n in (4, 9, 16):
        g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        h = (g + g.conj().T) / 2.0
        rows.append((f"jacobi_eigh {n}x{n}", timeit(lambda: k.jacobi_eigh(h, 100, 1e-12), repeats)))

    z = rng.standard_normal(3) + 1j * rng.standard_normal(3)
    rows.append(
        (
            "sym2_singular_values",
            timeit(lambda: k.sym2_singular_values(z[0], z[1], z[2]), repeats * 10),
        )
    )

    for d1, d2 in ((2, 2), (3, 3)):
        v = rng.standard_normal(d1 * d2) + 1j * rng.standard_normal(d1 * d2)
        v /= np.linalg.norm(v)
        rows.append(
            (
                f"pure_concurrence_sq {d1}x{d2}",
                timeit(lambda: k.pure_concurrence_sq(v, d1, d2), repeats * 10),
            )
        )
    return rows


def bench_wootters(repeats, rng):
    # end to end: build a random rank-2 state and run the closed-form route
    # (three eigensolves on the active backend)
    e = random_rank2_ensemble(BipartiteShape(2, 2), rng)
    rho = density_from_ensemble(e)
    return timeit(lambda: wootters_concurrence(rho), repeats)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeats", type=int, default=500)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    results = {}
    for name in kernels.available_backends():
        results[name] = dict(bench_backend(name, args.repeats, rng))

    names = list(results)
    width = max(len(k) for v in results.values() for k in v)
    header = f"{'kernel':<{width}}  " + "  ".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for key in results[names[0]]:
        line = f"{key:<{width}}  " + "  ".join(f"{results[n][key] * 1e6:>10.2f}us" for n in names)
        if len(names) == 2:
            line += f"  {results[names[0]][key] / results[names[1]][key]:>7.1f}x"
        print(line)

    print()
    print(f"active backend: {kernels.BACKEND}")
    print(f"wootters_concurrence end-to-end: {bench_wootters(args.repeats, rng) * 1e6:.1f}us")


if __name__ == "__main__":
    main()
