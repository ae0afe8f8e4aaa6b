"""Re-derive the single-move weight table from its defining constraints.

Prints the gauge report (solution counts with and without the gauge
conditions), asserts the gauged solution is unique and matches the table
frozen in webkup.flows, and regenerates docs/derived_rules.md.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from webkup import flows


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument(
        "--print-literal",
        action="store_true",
        help="print the solved table as a Python literal and exit",
    )
    args = ap.parse_args()

    free = flows.calibrate_weight_table(with_gauge=False, all_solutions=True)
    gauged = flows.calibrate_weight_table(with_gauge=True, all_solutions=True)
    print(f"solutions without gauge: {len(free)}")
    print(f"solutions with gauge:    {len(gauged)}")
    if len(gauged) != 1:
        print("ERROR: gauge did not pin a unique table", file=sys.stderr)
        return 1
    table = flows.table_from_solution(gauged[0])

    if args.print_literal:
        print("PLUS_WEIGHTS = {")
        for k, v in table.items():
            print(f"    {k!r}: {v},")
        print("}")
        return 0

    if flows.PLUS_WEIGHTS != table:
        print("ERROR: frozen PLUS_WEIGHTS differs from the derived table", file=sys.stderr)
        return 1
    flows.verify_frozen_table()
    print("frozen table matches the derivation and satisfies all constraints")

    try:
        from derive_docs import write_docs  # local helper, optional
    except ImportError:
        write_docs = None
    if write_docs is not None:
        write_docs(len(free), len(gauged))
        print("regenerated docs/derived_rules.md")
    return 0


if __name__ == "__main__":
    sys.exit(main())
