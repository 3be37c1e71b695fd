#!/usr/bin/env python3
"""Run the full analysis on every builtin graph and print a verdict table.

Usage: python scripts/analyze_builtins.py [--json] [--seed N]
"""

import argparse
import json
import sys
import time

from graphperiod.bounds import analyze
from graphperiod.catalog import BUILTIN_NAMES, builtin
from graphperiod.config import Config


def main() -> int:
    parser = argparse.ArgumentParser()
    parser.add_argument("--json", action="store_true")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    rows = []
    for name in BUILTIN_NAMES:
        start = time.monotonic()
        report = analyze(builtin(name), Config(seed=args.seed))
        elapsed = time.monotonic() - start
        rows.append((name, report, elapsed))
        if not args.json:
            per, ind = report.period, report.index
            fmt = lambda iv: str(iv.lower) if iv.resolved else f"{iv.lower}..{iv.upper}"
            print(
                f"{name:<18} genus {report.genus:<3} |Aut| {report.aut_order:<14} "
                f"period {fmt(per):<7} index {fmt(ind):<7} "
                f"certs {len(report.certificates):<3} {elapsed:6.1f}s"
            )
    if args.json:
        print(json.dumps([r.to_json_dict() for _, r, _ in rows], indent=2))
    return 0


if __name__ == "__main__":
    sys.exit(main())
