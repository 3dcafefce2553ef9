"""Exhaustive sweep over rho-like seeds with doubled values.

    python scripts/sweep_family.py --max-n 10

Reports per-(n, l) counts of complexes, arrows, nonstandard arrows and any
failed structural check.
"""

import argparse
import time
from collections import Counter, defaultdict
from itertools import combinations

from singular_bgg.complex import build_complex, check_suite, diamond_counts
from singular_bgg.weights import Weight, analyze_singularity


def family(max_n):
    for n in range(2, max_n + 1):
        for l in range(n // 2 + 1):
            for doubled in combinations(range(n - l), l):
                coords = sorted(list(range(n - l)) + list(doubled), reverse=True)
                for k in range(max(l, 1), n // 2 + 1):
                    yield Weight(tuple(coords)), k


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-n", type=int, default=10)
    args = ap.parse_args()

    t0 = time.perf_counter()
    stats = defaultdict(Counter)
    failures = []
    for mu, k in family(args.max_n):
        prof = analyze_singularity(mu, k)
        c = build_complex(prof)
        row = stats[(prof.n, prof.l)]
        row["complexes"] += 1
        row["arrows"] += len(c.arrows)
        row["nonstandard"] += sum(1 for a in c.arrows if not a.standard)
        row["single-path intervals"] += sum(1 for v in diamond_counts(c).values() if v == 1)
        failures += [(str(mu), k, r.line()) for r in check_suite(c) if not r.ok]

    print(f"{'n':>3}{'l':>3}{'complexes':>11}{'arrows':>8}{'nonstd':>8}{'1-path':>8}")
    for (n, l), row in sorted(stats.items()):
        print(f"{n:>3}{l:>3}{row['complexes']:>11}{row['arrows']:>8}"
              f"{row['nonstandard']:>8}{row['single-path intervals']:>8}")
    print(f"\n{sum(r['complexes'] for r in stats.values())} complexes, "
          f"{len(failures)} failed checks, {time.perf_counter() - t0:.1f}s")
    for f in failures[:20]:
        print("  FAIL", *f)


if __name__ == "__main__":
    main()
