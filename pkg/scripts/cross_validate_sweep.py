#!/usr/bin/env python3
"""Sweep the logic/quantum cross-validation over several prime dimensions.

For every axiom {a, b} and measurement setting m the sweep compares the
decidability forecast with the exact Born classification and with the
group-counting multiplicities. Exits nonzero if any cell disagrees.
"""

import argparse
import sys

from mublogic import Dimension, cross_validate


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--dims", default="2,3,5,7",
        help="comma-separated prime dimensions (default: 2,3,5,7)",
    )
    parser.add_argument("--tol", type=float, default=1e-9)
    args = parser.parse_args()

    dims = [int(tok) for tok in args.dims.split(",") if tok.strip()]
    failures = 0
    print(f"{'d':>3}  {'cells':>6}  {'disagree':>8}  {'max |born - counting/d|':>24}")
    for d in dims:
        report = cross_validate(Dimension(d), args.tol)
        failures += report.disagreements
        print(
            f"{d:>3}  {len(report.cells):>6}  {report.disagreements:>8}  "
            f"{report.max_born_vs_counting_deviation:>24.3e}"
        )
        for cell in report.cells:
            if not cell.agree:
                print(
                    f"     DISAGREE axiom {{{cell.axiom.a},{cell.axiom.b.value}}} "
                    f"m={cell.m}: predicted {cell.predicted.kind}, "
                    f"observed {cell.observed.kind}"
                )
    print("all cells agree" if failures == 0 else f"{failures} disagreements")
    return 0 if failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
