#!/usr/bin/env python3
"""For each shape up to a weight, report the beta (if any) at which L1 and L2 kill J.

    python3 scripts/singular_scan.py --max-weight 6
"""

import argparse

from jacksym.partition import revlex_order
from jacksym.virasoro import beta_star, solve_singular_beta


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-weight", type=int, default=6)
    args = ap.parse_args()
    for w in range(1, args.max_weight + 1):
        for la in revlex_order(w):
            beta = solve_singular_beta(la)
            note = ""
            if la.is_rectangle():
                expected = beta_star(la[0], len(la))
                note = "matches (r+1)-(1+s)/a" if beta == expected else "MISMATCH"
            print(f"{str(la):>14}  {'-' if beta is None else str(beta):>16}  {note}")


if __name__ == "__main__":
    main()
