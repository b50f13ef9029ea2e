#!/usr/bin/env python3
"""Scan cut-vertex bases for uniform blow-ups.

Runs the exploratory search over every connected base with a cut
vertex and diameter >= 3, up to --n-max vertices.  Any hit would be a
counterexample to the expectation that no such base works; none are
known.

Example:
    python scripts/cut_vertex_scan.py --n-max 5 --max-size 4
"""

from __future__ import annotations

import argparse
import json
import sys

from bugraph.search import SearchBudget, explore_cut_conjecture, report_to_json, report_tsv_line


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=5, help="largest base size (<= 6)")
    ap.add_argument("--family", choices=("ik", "all"), default="ik")
    ap.add_argument("--max-size", type=int, default=4)
    ap.add_argument("--time-limit", type=float, default=None)
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--json", type=str, default=None, help="write full reports here")
    args = ap.parse_args()

    budget = SearchBudget(
        part_family=args.family,
        max_part_size=args.max_size,
        time_limit=args.time_limit,
    )
    reports = explore_cut_conjecture(args.n_max, budget, jobs=args.jobs)

    print("base\texamined\tfound\texhausted")
    hits = []
    for cv in reports:
        print(report_tsv_line(cv.search))
        hits.extend(cv.search.found)

    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump([report_to_json(cv.search) for cv in reports], fh, indent=2)

    if hits:
        print(f"COUNTEREXAMPLES: {', '.join(s.label() for s in hits)}", file=sys.stderr)
    else:
        complete = all(cv.search.exhausted for cv in reports)
        note = "every search exhausted" if complete else "some searches hit the time limit"
        print(f"# no uniform blow-ups over {len(reports)} bases; {note}", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
