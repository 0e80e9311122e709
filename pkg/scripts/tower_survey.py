#!/usr/bin/env python3
"""Survey the reduction towers of all small cyclic Nakayama algebras.

Tabulates, per vertex count, how deep the iterated syzygy-filtered
reduction goes before terminating and how often each terminal occurs,
split by finite versus infinite global dimension.  A quick way to see the
finite/infinite dichotomy in action.

Usage:
  python scripts/tower_survey.py --n-max 6
"""

import argparse
import sys
from collections import Counter

from nakayama import INFINITE, enumerate_cyclic, epsilon_tower, homology_report


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n-max", type=int, default=6)
    parser.add_argument("--cap", type=int, default=None)
    args = parser.parse_args()

    for n in range(1, args.n_max + 1):
        depths = Counter()
        terminals = Counter()
        mismatches = 0
        total = 0
        for series in enumerate_cyclic(n, args.cap):
            if series.is_selfinjective:
                continue
            total += 1
            tower = epsilon_tower(series)
            depths[tower.depth] += 1
            terminals[tower.terminal] += 1
            finite = homology_report(series).gldim != INFINITE
            if (tower.terminal == "linear") != finite:
                mismatches += 1
        depth_txt = " ".join(f"d{d}:{c}" for d, c in sorted(depths.items()))
        term_txt = " ".join(f"{t}:{c}" for t, c in sorted(terminals.items()))
        print(f"n={n}: {total} non-selfinjective classes | {term_txt} | {depth_txt}"
              + (f" | MISMATCHES {mismatches}" if mismatches else ""))
    return 0


if __name__ == "__main__":
    sys.exit(main())
