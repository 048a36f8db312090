#!/usr/bin/env python3
"""Linearity experiment: step counters across instance families and sizes.

Runs the instrumented traversal on the three bench families and reports
ops/(n + m + 1) per size.  If the claimed linear bound holds, the ratio
column is flat; anything superlinear shows up as drift.
"""

import argparse
import time

from pcdfs.oracle import GeneratorSpec, SplitMix64, generate
from pcdfs.dfs import pc_dfs_forest

FAMILIES = ("complete-complement", "random-4n", "path")


def instance(family, n, rng):
    if family == "random-4n":
        return generate(GeneratorSpec(
            kind="random", n=n, arc_count=min(4 * n, n * (n - 1)),
            complement_probability=0.5, seed=rng.next_u64()))
    return generate(GeneratorSpec(kind=family, n=n))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--min-pow", type=int, default=10)
    ap.add_argument("--max-pow", type=int, default=18)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = SplitMix64(args.seed)
    print(f"{'family':<22}{'n':>9}{'m~':>10}{'elapsed_s':>11}"
          f"{'ops':>12}{'ratio':>8}")
    worst_drift = 0.0
    for family in FAMILIES:
        first = last = None
        for p in range(args.min_pow, args.max_pow + 1, 2):
            n = 2 ** p
            g = instance(family, n, rng)
            start = time.perf_counter()
            _, ops = pc_dfs_forest(g, instrument=True)
            elapsed = time.perf_counter() - start
            ratio = ops.ratio(n, g.m_tilde)
            print(f"{family:<22}{n:>9}{g.m_tilde:>10}{elapsed:>11.3f}"
                  f"{ops.total():>12}{ratio:>8.3f}")
            if first is None:
                first = ratio
            last = ratio
        drift = max(last / first, first / last)
        worst_drift = max(worst_drift, drift)
    print(f"\nworst ratio drift across sizes: {worst_drift:.3f}x "
          f"({'OK: linear' if worst_drift <= 2.0 else 'NOT linear'})")


if __name__ == "__main__":
    main()
