#!/usr/bin/env python3
"""Sweep the three integrality claims and print a JSON report.

    python3 scripts/integrality_sweep.py --max-weight 8 --lr-max-weight 7
"""

import argparse
import json
import time

from jacksym.structure import integrality_report


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--max-weight", type=int, default=8)
    ap.add_argument("--lr-max-weight", type=int, default=7)
    args = ap.parse_args()
    t = time.perf_counter()
    report = integrality_report(args.max_weight, args.lr_max_weight)
    out = {"max_weight": args.max_weight, "lr_max_weight": args.lr_max_weight,
           "seconds": round(time.perf_counter() - t, 3),
           "claims": {k: v.to_json() for k, v in report.items()}}
    print(json.dumps(out, indent=2, sort_keys=True))
    raise SystemExit(0 if all(v.passed for v in report.values()) else 1)


if __name__ == "__main__":
    main()
