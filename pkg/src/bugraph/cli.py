"""Command-line front end.

Every subcommand prints deterministic, scriptable output (JSON except
where noted) so runs can be diffed and piped.  Exit codes separate the
kinds of failure a pipeline may want to branch on:

    0   success
    2   usage error (bad flags, unknown subcommand)
    3   malformed input (unparsable graph6, bad JSON, bad sizes)
    10  the graph is not betweenness-uniform (``uniform`` only)
    1   unexpected internal failure

Graphs are given either inline as graph6 or as a path to a file whose
first non-blank line is graph6; an existing file wins, ``--literal``
forces the inline reading.  ``--jobs`` defaults to the BUGRAPH_JOBS
environment variable when set.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .betweenness import (
    betweenness_exact,
    format_rational,
    is_betweenness_uniform,
    profile_json,
)
from .blowup import (
    blow_up,
    decompose_betweenness,
    decomposition_json,
    spec_from_json,
    spec_to_json,
)
from .constructions import (
    p2_clique_spec,
    p3_independent_spec,
    p4_mixed_spec,
    star_spec,
)
from .graphs import (
    Graph,
    Graph6Error,
    enumerate_graphs,
    enumerate_trees,
    parse_graph6,
    serialize_graph6,
)
from .search import (
    SearchBudget,
    report_to_json,
    report_tsv_line,
    search_blowups,
)

__all__ = ["main", "console_main"]

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BAD_INPUT = 3
EXIT_NOT_UNIFORM = 10
EXIT_INTERNAL = 1


class _InputError(Exception):
    """Anything wrong with user-supplied data (exit code 3)."""


def _default_jobs() -> int:
    raw = os.environ.get("BUGRAPH_JOBS", "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _load_graph(arg: str, literal: bool) -> Graph:
    text = arg
    if not literal and os.path.exists(arg):
        try:
            with open(arg, encoding="ascii") as fh:
                raw = fh.read()
        except OSError as exc:
            raise _InputError(f"cannot read {arg}: {exc}") from exc
        lines = [ln.strip() for ln in raw.splitlines() if ln.strip()]
        if not lines:
            raise _InputError(f"{arg}: empty file")
        text = lines[0]
    try:
        return parse_graph6(text)
    except Graph6Error as exc:
        raise _InputError(f"bad graph6 {text!r}: {exc}") from exc


def _load_spec(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise _InputError(f"{path}: invalid JSON: {exc}") from exc
    try:
        return spec_from_json(obj)
    except (KeyError, TypeError, ValueError, Graph6Error) as exc:
        raise _InputError(f"{path}: invalid blow-up spec: {exc}") from exc


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2, sort_keys=False))


def _cmd_bc(args) -> int:
    g = _load_graph(args.graph, args.literal)
    _emit(profile_json(betweenness_exact(g)))
    return EXIT_OK


def _cmd_uniform(args) -> int:
    g = _load_graph(args.graph, args.literal)
    verdict = is_betweenness_uniform(g)
    _emit(
        {
            "uniform": verdict.uniform,
            "common": None if verdict.common is None else format_rational(verdict.common),
        }
    )
    return EXIT_OK if verdict.uniform else EXIT_NOT_UNIFORM


def _cmd_blowup(args) -> int:
    spec = _load_spec(args.spec)
    bg = blow_up(spec)
    _emit(
        {
            "graph6": serialize_graph6(bg.graph),
            "n": bg.graph.n,
            "edges": bg.graph.edge_count,
            "part_of": list(bg.part_of),
            "spec": spec_to_json(spec),
        }
    )
    return EXIT_OK


def _cmd_decompose(args) -> int:
    spec = _load_spec(args.spec)
    bg = blow_up(spec)
    if not (0 <= args.vertex < bg.graph.n):
        raise _InputError(
            f"vertex {args.vertex} out of range for a {bg.graph.n}-vertex blow-up"
        )
    _emit(decomposition_json(decompose_betweenness(bg, args.vertex)))
    return EXIT_OK


def _build_family_spec(family: str, sizes: list[int]):
    try:
        if family == "p2":
            if len(sizes) != 1:
                raise _InputError("construct p2 takes one size")
            return p2_clique_spec(sizes[0])
        if family == "p3":
            if len(sizes) != 2:
                raise _InputError("construct p3 takes two sizes")
            return p3_independent_spec(sizes[0], sizes[1])
        if family == "star":
            if not sizes:
                raise _InputError("construct star takes at least one size")
            return star_spec(tuple(sizes))
        if family == "p4":
            if len(sizes) != 4:
                raise _InputError("construct p4 takes four sizes")
            return p4_mixed_spec(*sizes)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    raise _InputError(f"unknown family {family!r}")


def _cmd_construct(args) -> int:
    spec = _build_family_spec(args.family, args.sizes)
    bg = blow_up(spec)
    verdict = is_betweenness_uniform(bg.graph)
    _emit(
        {
            "spec": spec_to_json(spec),
            "graph6": serialize_graph6(bg.graph),
            "verification": {
                "uniform": verdict.uniform,
                "common": None
                if verdict.common is None
                else format_rational(verdict.common),
            },
        }
    )
    return EXIT_OK


def _cmd_search(args) -> int:
    base = _load_graph(args.graph, args.literal)
    try:
        budget = SearchBudget(
            part_family=args.family,
            max_part_size=args.max_size,
            max_total_vertices=args.max_total,
            time_limit=args.time_limit,
        )
        report = search_blowups(base, budget, jobs=args.jobs, prune=not args.no_prune)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    if args.tsv:
        print(report_tsv_line(report))
    else:
        _emit(report_to_json(report))
    return EXIT_OK


def _cmd_verify(args) -> int:
    from .acceptance import run_suite

    results = run_suite(level=args.level, jobs=args.jobs)
    return EXIT_OK if all(r.passed for r in results) else EXIT_INTERNAL


def _cmd_enum(args) -> int:
    try:
        items = enumerate_trees(args.n) if args.kind == "trees" else enumerate_graphs(args.n)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    for g in items:
        print(serialize_graph6(g))
    return EXIT_OK


def _add_graph_arg(sub) -> None:
    sub.add_argument("-g", "--graph", required=True, help="graph6 string or file path")
    sub.add_argument(
        "--literal",
        action="store_true",
        help="treat the -g value as graph6 even if a file of that name exists",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bugraph",
        description="Exact betweenness centrality, blow-up constructions, and "
        "bounded searches for betweenness-uniform graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bc", help="exact betweenness profile of a graph")
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_bc)

    p = sub.add_parser("uniform", help="test betweenness-uniformity (exit 10 if not)")
    _add_graph_arg(p)
    p.set_defaults(func=_cmd_uniform)

    p = sub.add_parser("blowup", help="realize a blow-up spec as a concrete graph")
    p.add_argument("-s", "--spec", required=True, help="path to a blow-up spec JSON file")
    p.set_defaults(func=_cmd_blowup)

    p = sub.add_parser("decompose", help="global/local betweenness split at one vertex")
    p.add_argument("-s", "--spec", required=True, help="path to a blow-up spec JSON file")
    p.add_argument("-v", "--vertex", required=True, type=int, help="vertex of the blow-up")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser(
        "construct", help="emit a stock uniform-family spec and verify it"
    )
    p.add_argument("family", choices=("p2", "p3", "star", "p4"))
    p.add_argument("sizes", nargs="+", type=int)
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("search", help="exhaustive in-budget scan for uniform blow-ups")
    _add_graph_arg(p)
    p.add_argument("--family", choices=("ik", "all"), default="ik")
    p.add_argument("--max-size", type=int, default=4, help="largest part size")
    p.add_argument("--max-total", type=int, default=None, help="cap on blow-up vertices")
    p.add_argument("--time-limit", type=float, default=None, help="seconds before a partial report")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.add_argument("--no-prune", action="store_true", help="disable cut-vertex pruning")
    p.add_argument("--tsv", action="store_true", help="one-line summary instead of JSON")
    p.set_defaults(func=_cmd_search)

    p = sub.add_parser("verify-paper", help="run the acceptance checks, print a PASS/FAIL table")
    p.add_argument("--level", choices=("quick", "full"), default="quick")
    p.add_argument("--jobs", type=int, default=_default_jobs())
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enum", help="stream non-isomorphic graphs as graph6 lines")
    p.add_argument("kind", choices=("trees", "graphs"))
    p.add_argument("-n", required=True, type=int, help="vertex count")
    p.set_defaults(func=_cmd_enum)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else EXIT_OK
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    except Exception as exc:  # pragma: no cover - defensive
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def console_main() -> None:
    sys.exit(main())
