#!/usr/bin/env python3
"""Run the axiom and seminormal suites across all towers and print a summary.

Usage: python scripts/run_suites.py [--fast]
"""

import argparse
import time

from celltower.checks import full_axiom_suite
from celltower.seminormal import seminormal_suite
from celltower.towers import make_tower

FULL = (
    ("symmetric", None, 5, 4),
    ("hecke", None, 5, 3),
    ("tl", 0, 4, 4),
    ("brauer", 0, 4, 4),
    ("partition", 7, 6, 6),
)

FAST = (
    ("symmetric", None, 3, 3),
    ("hecke", None, 3, 2),
    ("tl", 0, 3, 3),
    ("brauer", 0, 3, 3),
    ("partition", 5, 4, 4),
)


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--fast", action="store_true", help="small levels only")
    args = ap.parse_args()
    rows = FAST if args.fast else FULL
    grand_total = 0
    for name, param, axiom_level, seminormal_level in rows:
        t0 = time.time()
        tower = make_tower(name, axiom_level, param)
        report = full_axiom_suite(tower, axiom_level)
        for r in range(1, seminormal_level + 1):
            report.extend(seminormal_suite(tower, r))
        failures = [x for x in report.results if x.status != "pass"]
        grand_total += len(failures)
        label = name if param is None else f"{name}(n={param})"
        print(
            f"{label:16s} checks={len(report.results):4d} "
            f"failures={len(failures)} time={time.time() - t0:.1f}s"
        )
        for x in failures:
            print(f"    FAIL {x.axiom} at level {x.level}: {x.witness}")
    raise SystemExit(1 if grand_total else 0)


if __name__ == "__main__":
    main()
