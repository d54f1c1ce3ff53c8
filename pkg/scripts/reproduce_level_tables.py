"""Recompute the bundled reference level tables and show the residuals.

Prints, for each molecule carrying a ro-vibrational reference table, the
closed-form energy next to the transcribed value, and for N2 the pure
vibrational ladder with its Morse column.  Residuals beyond the 0.005
cm^-1 reproduction band (0.01 for N2) are flagged.

Usage: python scripts/reproduce_level_tables.py [--molecule NAME]
"""

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from reference_levels import N2_REFERENCE_COLUMNS, REFERENCE_LEVELS

from rovib.database import load_database
from rovib.spectrum import level, morse_vibrational_energy


def print_rovibrational(db, name):
    params = db.get(name)
    print(f"\n{name}  (De = {params.De:.0f} cm^-1, re = {params.re} A)")
    print(f"{'nu':>3} {'J':>3} {'computed':>12} {'reference':>12} "
          f"{'delta':>9}  {'benchmark':>12}")
    worst = 0.0
    for (nu, J), (benchmark, reference) in sorted(REFERENCE_LEVELS[name].items()):
        computed = level(params, nu, J).E
        delta = computed - reference
        worst = max(worst, abs(delta))
        mark = "" if abs(delta) <= 0.005 else "  <-- off"
        bench = f"{benchmark:12.3f}" if benchmark is not None else " " * 12
        print(f"{nu:>3} {J:>3} {computed:12.4f} {reference:12.4f} "
              f"{delta:9.4f}  {bench}{mark}")
    print(f"worst |delta| = {worst:.4f} cm^-1")


def print_n2(db):
    params = db.get("N2")
    print(f"\nN2  vibrational ladder, J = 0")
    print(f"{'nu':>3} {'computed':>12} {'reference':>12} {'delta':>9} "
          f"{'morse':>12} {'morse ref':>12} {'delta':>9}")
    worst = 0.0
    for nu, (_, _, closed_ref, morse_ref) in sorted(N2_REFERENCE_COLUMNS.items()):
        closed = level(params, nu, 0).E
        morse = morse_vibrational_energy(params.De, params.we, nu)
        d1, d2 = closed - closed_ref, morse - morse_ref
        worst = max(worst, abs(d1), abs(d2))
        print(f"{nu:>3} {closed:12.4f} {closed_ref:12.4f} {d1:9.4f} "
              f"{morse:12.4f} {morse_ref:12.4f} {d2:9.4f}")
    print(f"worst |delta| = {worst:.4f} cm^-1")


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--molecule", help="restrict to one molecule")
    args = parser.parse_args()

    db = load_database()
    names = [args.molecule] if args.molecule else list(db.names)
    for name in names:
        if name in REFERENCE_LEVELS:
            print_rovibrational(db, name)
        elif name == "N2":
            print_n2(db)
        else:
            print(f"\n{name}: no reference table bundled")


if __name__ == "__main__":
    main()
