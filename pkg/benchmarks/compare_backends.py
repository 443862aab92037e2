#!/usr/bin/env python3
"""Compare the compiled kernel against the pure-Python fallback.

Times the three inner loops on random inputs and a full decoding
simulation, then prints one table with the speedups.  Statistics from the
two backends are asserted identical before any timing is reported.

Usage: python benchmarks/compare_backends.py [--trials N] [--size n,k]
"""

import argparse
import random
import time

from prcodes import Field, backend, rs_code
from prcodes.channel import SimOptions, simulate


def rand_coeffs(field, rng, deg):
    cs = [rng.randrange(field.q) for _ in range(deg)] + [rng.randrange(1, field.q)]
    return cs


def time_raw_ops(field, reps):
    rng = random.Random(1)
    pairs = [(rand_coeffs(field, rng, 63), rand_coeffs(field, rng, 31))
             for _ in range(64)]
    t0 = time.perf_counter()
    for _ in range(reps):
        for a, b in pairs:
            backend.poly_mul(field, a, b)
            backend.poly_divmod(field, a, b)
    return time.perf_counter() - t0


def time_simulation(code, trials):
    opts = [SimOptions(a, r, s)
            for a in ("1", "2") for r in ("remainder", "quotient")
            for s in ("adaptive", "threshold")]
    budget = (code.N - code.K - 4) // 2
    t0 = time.perf_counter()
    stats = simulate(code, trials, 4, budget, opts, master_seed=2024)
    return time.perf_counter() - t0, stats.to_tsv()


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--size", default="64,32",
                        help="n,k of the GF(256) RS benchmark code")
    args = parser.parse_args()

    if not backend.have_kernel():
        raise SystemExit("compiled kernel is not built; nothing to compare")

    n, k = (int(t) for t in args.size.split(","))
    field = Field(2, 8)
    code = rs_code(field, list(range(n)), k)
    print(f"benchmark code: GF(256) RS(n={n}, k={k}), {args.trials} trials per backend")

    results = {}
    for mode in ("py", "c"):
        backend.set_backend(mode)
        raw = time_raw_ops(field, reps=20)
        sim, tsv = time_simulation(code, args.trials)
        results[mode] = (raw, sim, tsv)
        print(f"  [{mode}] raw ops {raw:.3f}s   simulate {sim:.3f}s")
    backend.set_backend("auto")

    if results["py"][2] != results["c"][2]:
        raise SystemExit("backend statistics diverge; timing comparison is void")

    print("\nworkload      pure-python   compiled   speedup")
    for label, idx in (("raw ops", 0), ("simulate", 1)):
        py, c = results["py"][idx], results["c"][idx]
        print(f"{label:<12}  {py:>10.3f}s  {c:>8.3f}s  {py / c:>6.1f}x")
    print("\nstatistics identical across backends: ok")


if __name__ == "__main__":
    main()
