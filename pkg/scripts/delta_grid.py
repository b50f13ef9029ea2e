#!/usr/bin/env python3
"""Grid sweep of the extremal-part ratio tables.

For each context-size tuple, lists the ratio every candidate part
class achieves and marks the maximizer, confirming that the edgeless
class wins in the second slot and the complete class in the first.

Example:
    python scripts/delta_grid.py --slot second --m 3 --grid-max 3
"""

from __future__ import annotations

import argparse
import sys
from itertools import product

from bugraph.betweenness import format_rational
from bugraph.graphs import serialize_graph6
from bugraph.search import lemma_clique_table, lemma_independent_table


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--slot", choices=("first", "second"), default="second",
                    help="which path4 part the candidate class occupies")
    ap.add_argument("--m", type=int, default=3, help="candidate part size (<= 5)")
    ap.add_argument("--grid-max", type=int, default=2, help="context sizes range over 1..this")
    args = ap.parse_args()

    table = lemma_independent_table if args.slot == "second" else lemma_clique_table
    expected = "edgeless" if args.slot == "second" else "complete"
    full = args.m * (args.m - 1) // 2

    print("context\tclass\tedges\tratio\tmax")
    violations = 0
    for ctx in product(range(1, args.grid_max + 1), repeat=3):
        rows = table(args.m, *ctx)
        best = max(v for _, v in rows)
        for h, v in rows:
            mark = "*" if v == best else ""
            print(
                f"{ctx}\t{serialize_graph6(h)}\t{h.edge_count}\t{format_rational(v)}\t{mark}"
            )
        winner_edges = [h.edge_count for h, v in rows if v == best]
        want = 0 if expected == "edgeless" else full
        if want not in winner_edges:
            violations += 1
            print(f"violation at {ctx}: {expected} class not maximal", file=sys.stderr)
    if violations:
        print(f"{violations} grid points violate the expectation", file=sys.stderr)
        return 1
    print(f"# {expected} class maximal at every grid point", file=sys.stderr)
    return 0


if __name__ == "__main__":
    sys.exit(main())
