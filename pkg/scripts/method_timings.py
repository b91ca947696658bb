#!/usr/bin/env python3
"""Time every construction method per weight and print a table.

    python3 scripts/method_timings.py --max-weight 8
"""

import argparse
import time

from jacksym.jack import FILTRATION_MAX_WEIGHT, clear_caches, jack
from jacksym.partition import revlex_order

METHODS = ("iteration", "determinant", "filtration", "gram_schmidt")


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-weight", type=int, default=8)
    args = ap.parse_args()
    print(f"{'weight':>6} {'shapes':>6} " + " ".join(f"{m:>13}" for m in METHODS))
    for w in range(1, args.max_weight + 1):
        cells = []
        for m in METHODS:
            if m == "filtration" and w > FILTRATION_MAX_WEIGHT:
                cells.append(f"{'-':>13}")
                continue
            clear_caches()
            t = time.perf_counter()
            for la in revlex_order(w):
                jack(la, "Q", "q", m)
            cells.append(f"{time.perf_counter() - t:>13.4f}")
        print(f"{w:>6} {len(revlex_order(w)):>6} " + " ".join(cells))


if __name__ == "__main__":
    main()
