"""Run every module-level suite over the default shape grid and summarize.

Usage: python3 scripts/run_grid.py [--level-one-max N] [--level-two-max N] [--json PATH]
"""

import argparse
import json
import time
from dataclasses import replace

from klrspecht.config import ShapeGrid
from klrspecht.garnir import COLUMN, ROW
from klrspecht.specht import SpechtConfig, SpechtModule
from klrspecht.verify import dual_degree_formula, verify_duality, verify_sign_twist, verify_specht


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--level-one-max", type=int, default=ShapeGrid.level_one_max)
    parser.add_argument("--level-two-max", type=int, default=ShapeGrid.level_two_max)
    parser.add_argument("--json", help="write every report to this file")
    args = parser.parse_args()
    grid = replace(ShapeGrid(), level_one_max=args.level_one_max, level_two_max=args.level_two_max)
    cfg = SpechtConfig()
    reports = []
    start = time.perf_counter()
    for mu, g in grid.cases():
        reports.append(verify_specht(SpechtModule(mu, g, ROW, cfg)))
        reports.append(verify_specht(SpechtModule(mu, g, COLUMN, cfg)))
        reports.append(verify_sign_twist(mu, g, cfg))
        reports.append(verify_duality(mu, g, cfg))
        reports.append(dual_degree_formula(mu, g, cfg))
    failed = [r for r in reports if not r.passed]
    print(f"{len(reports)} reports, {len(failed)} failed, {time.perf_counter() - start:.1f}s")
    for r in failed[:10]:
        print("  " + r.summary(), r.first_failure().name)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump([r.to_json() for r in reports], fh, indent=1)
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
