#!/usr/bin/env python3
"""Print Gram determinants per cell, factored through the seminormal gammas.

Usage: python scripts/gram_report.py --tower hecke --level 3
"""

import argparse

from celltower.linalg import mat_det
from celltower.murphy import LevelData
from celltower.scalars import format_scalar
from celltower.seminormal import seminormal_cell
from celltower.towers import make_tower


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--tower", required=True)
    ap.add_argument("--param", type=int, default=None)
    ap.add_argument("--level", type=int, required=True)
    args = ap.parse_args()

    tower = make_tower(args.tower, args.level, args.param)
    data = LevelData.get(tower, args.level)
    for ci, lam in enumerate(data.cells):
        det = mat_det(data.gram_matrix(ci), tower.domain)
        cell = seminormal_cell(tower, args.level, ci)
        gammas = cell.gammas()
        print(f"cell {lam}  dim {len(data.paths[lam])}")
        print(f"  det  = {format_scalar(det)}")
        for t, g in zip(data.paths[lam], gammas):
            print(f"  gamma[{t}] = {format_scalar(g)}")


if __name__ == "__main__":
    main()
