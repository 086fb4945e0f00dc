#!/usr/bin/env python3
"""Tabulate stable Kronecker coefficients from the diagram engine against the
character oracle.

Usage: python scripts/kronecker_table.py [--max-r 3] [--samples-r4 0] [--seed 20260824]
"""

import argparse
import random
import time

from celltower.characters import stable_kronecker_oracle
from celltower.combinat import partitions_of
from celltower.skew import stable_kronecker_engine
from celltower.tensorspace import stable_kronecker_tensor


def all_triples(r):
    for s in range(r + 1):
        for lam in partitions_of(s):
            for mu in partitions_of(r - s):
                for m in range(r + 1):
                    for nu in partitions_of(m):
                        yield lam, mu, nu


def fmt(p):
    return ",".join(map(str, p)) if p else "-"


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-r", type=int, default=3)
    ap.add_argument("--samples-r4", type=int, default=0)
    ap.add_argument("--seed", type=int, default=20260824)
    args = ap.parse_args()

    mismatches = 0
    t0 = time.time()
    print(f"{'lam':10s} {'mu':10s} {'nu':10s} {'engine':>6s} {'oracle':>6s}")
    for r in range(args.max_r + 1):
        for lam, mu, nu in all_triples(r):
            engine = stable_kronecker_engine(lam, mu, nu)
            oracle = stable_kronecker_oracle(lam, mu, nu)
            mark = "" if engine == oracle else "  <-- MISMATCH"
            mismatches += engine != oracle
            print(
                f"{fmt(lam):10s} {fmt(mu):10s} {fmt(nu):10s} "
                f"{engine:6d} {oracle:6d}{mark}"
            )
    if args.samples_r4:
        rng = random.Random(args.seed)
        pool = [
            t
            for t in all_triples(4)
            if 1 <= sum(t[0]) <= 3  # tensor route needs both factors nonempty
        ]
        for lam, mu, nu in rng.sample(pool, args.samples_r4):
            engine = stable_kronecker_tensor(lam, mu, nu)
            oracle = stable_kronecker_oracle(lam, mu, nu)
            mark = "" if engine == oracle else "  <-- MISMATCH"
            mismatches += engine != oracle
            print(
                f"{fmt(lam):10s} {fmt(mu):10s} {fmt(nu):10s} "
                f"{engine:6d} {oracle:6d}{mark}"
            )
    print(f"# mismatches: {mismatches}, time {time.time() - t0:.1f}s")
    raise SystemExit(1 if mismatches else 0)


if __name__ == "__main__":
    main()
