"""Scan basis webs for one whose expansion is not a dual canonical element.

Walks plain boundaries in lex order by strand count, looking for a basis
web with more than one weight-zero flow, and double-checks any hit against
the dual canonical vectors directly.  Prints the search report; exits 1
only if a counterexample turns up.

The default budget comes from WEBKUP_SEARCH_BUDGET (seconds, default 1800).
A full sweep through 10 strands finishes in a few minutes.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from webkup.dualcan import search_counterexample


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-strands", type=int, default=10)
    ap.add_argument(
        "--budget-s",
        type=float,
        default=None,
        help="wall-clock budget in seconds (default: WEBKUP_SEARCH_BUDGET or 1800)",
    )
    ap.add_argument(
        "--stop-at-first",
        action="store_true",
        help="return as soon as one counterexample is found",
    )
    args = ap.parse_args()

    report = search_counterexample(
        max_strands=args.max_strands,
        budget_s=args.budget_s,
        stop_at_first=args.stop_at_first,
    )
    print(report.summary())
    return 1 if report.found else 0


if __name__ == "__main__":
    sys.exit(main())
