"""Benchmark the jit-compiled kernels against their pure-Python/NumPy bodies.

Times the two hot loops (finite polylogarithm over a Galois ring, weighted
binomial sum) and one end-to-end checker.  The uncompiled side calls the
same function bodies through .py_func; note that composite kernels still
reach jitted inner kernels that way, so the RKKSUMS_NO_NUMBA=1 run is the
authoritative timing for the full fallback engine.

Usage: python benchmarks/bench_kernels.py [--p 293] [--repeat 20]
"""

import argparse
import time

import numpy as np

from rkksums import kernels
from rkksums._accel import HAVE_NUMBA, engine


def timeit(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_pair(name, jitted, args, repeat):
    jitted(*args)  # warm the compile cache
    fast = timeit(lambda: jitted(*args), repeat)
    if HAVE_NUMBA:
        slow = timeit(lambda: jitted.py_func(*args), max(repeat // 4, 2))
        ratio = slow / fast if fast else float("inf")
        print(f"{name:<28} numba {fast * 1e3:9.3f} ms   "
              f"python {slow * 1e3:9.3f} ms   speedup {ratio:7.1f}x")
    else:
        print(f"{name:<28} python {fast * 1e3:9.3f} ms   (numba disabled)")


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--p", type=int, default=293)
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()
    p = args.p
    mod = p * p

    print(f"active engine: {engine()}  (p={p}, modulus=p^2)")

    g = np.array([3, 1, 4, 1, 5, 9, 1], dtype=np.int64)  # degree-6 quotient
    u = np.arange(2, 8, dtype=np.int64) % mod
    w = np.array([pow(k, -1, mod) for k in range(1, p)], dtype=np.int64)
    bench_pair("pounds over degree-6 ring", kernels.weighted_powers_poly,
               (u, w, g, mod), args.repeat)

    coefs = np.array([pow(3, k, mod) for k in range(p)], dtype=np.int64)
    wk = np.concatenate((np.ones(1, dtype=np.int64), w))
    bench_pair("weighted binomial sum", kernels.weighted_geometric_sum,
               (coefs, wk, 17, 1, p, mod), args.repeat)

    bench_pair("poly_powmod exponent p", kernels.poly_powmod,
               (u, p, g, mod), args.repeat)

    from fractions import Fraction

    from rkksums import theorems

    def end_to_end():
        theorems.root_sums.cache_clear()
        theorems._factor_rings.cache_clear()
        rep = theorems.check_rkksukmod2(5, Fraction(7), p)[-1]
        assert rep.verdict == "pass"

    end_to_end()
    t = timeit(end_to_end, max(args.repeat // 4, 2))
    print(f"{'checker rkksukmod2 (r=5)':<28} total {t * 1e3:9.3f} ms   "
          f"[engine={engine()}]")
    if HAVE_NUMBA:
        print("run with RKKSUMS_NO_NUMBA=1 to time the full fallback engine")


if __name__ == "__main__":
    main()
