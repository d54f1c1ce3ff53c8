"""Grid-eigensolver cross-check of the closed-form level tables.

For every molecule with a ro-vibrational reference table, solves the
radial problem numerically on a fine grid (with one exact halving and
h^2 extrapolation per J) and prints closed-form minus oracle for each
level, plus oracle minus benchmark where the table quotes a numerically
converged value.

Usage: python scripts/oracle_deviation_report.py [--grid-points N]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from reference_levels import REFERENCE_LEVELS

from rovib.database import load_database
from rovib.oracle import deviation_report

NU_ROWS = [0, 3, 5]
J_COLUMNS = [0, 1, 2, 3, 4, 5, 10, 15, 20]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--grid-points", type=int, default=32768)
    parser.add_argument("--molecule", help="restrict to one molecule")
    args = parser.parse_args()

    db = load_database()
    names = [args.molecule] if args.molecule else list(REFERENCE_LEVELS)
    for name in names:
        params = db.get(name)
        entries = REFERENCE_LEVELS[name]
        report = deviation_report(params, NU_ROWS, J_COLUMNS,
                                  n_points=args.grid_points)
        print(f"\n{name}  ({args.grid_points} grid points, h^2 extrapolated)")
        print(f"{'nu':>3} {'J':>3} {'closed':>12} {'oracle':>12} "
              f"{'cl-or':>8}  {'or-bench':>9}")
        bench_misses = 0
        for row in report.rows:
            benchmark = entries.get((row.nu, row.J), (None, None))[0]
            if benchmark is None:
                gap = " " * 9
            else:
                diff = row.E_oracle - benchmark
                bench_misses += abs(diff) > 0.05
                gap = f"{diff:9.3f}"
            print(f"{row.nu:>3} {row.J:>3} {row.E_closed:12.4f} "
                  f"{row.E_oracle:12.4f} {row.delta:8.4f}  {gap}")
        print(f"max |closed - oracle| = {report.max_abs_delta:.4f} cm^-1 "
              f"(J = 0: {report.max_abs_delta_by_J[0]:.4f})")
        print(f"benchmark rows outside 0.05 cm^-1: {bench_misses}")


if __name__ == "__main__":
    main()
