"""Bounded exhaustive searches for betweenness-uniform blow-ups.

``search_blowups`` walks every assignment of candidate parts to the
base vertices within a budget and tests each blown-up graph for
uniform betweenness.  The hot loop uses an exact integer/rational
screen (numpy matrix powers for geodesic counts, then per-vertex pair
sums) that evaluates one representative per interchangeable part;
swapping two vertices of an independent-set or clique part is an
automorphism, so equality on representatives is equality everywhere.
Every positive is then re-verified twice over, with the two
independent betweenness algorithms, before it is reported.

Pruning: a size-1 part on a base *cut vertex* leaves a cut vertex in
the blown-up graph, and no uniform graph on three or more vertices has
one, so those assignments are skipped.  (Degree alone is not enough:
on a triangle base the middle sizes (2,1,1) blow up to K_4, which is
uniform, so only genuine cut vertices are pruned.)

Reported searches are deterministic: identical inputs give identical
reports regardless of the worker count.  A time limit yields a partial
report with ``exhausted=False``, never a silently truncated one.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import prod

import numpy as np

from .betweenness import betweenness_exact, betweenness_oracle, profile_uniformity
from .blowup import (
    PART_CLIQUE,
    PART_EXPLICIT,
    BlowupSpec,
    PartDescriptor,
    blow_up,
    delta_extremal,
    spec_to_json,
)
from .constructions import p2_clique_spec, star_spec
from .graphs import (
    Graph,
    cut_vertices,
    diameter,
    enumerate_graphs,
    enumerate_trees,
    generate,
    is_connected,
    is_isomorphic,
    serialize_graph6,
)

__all__ = [
    "FAMILY_ALL",
    "FAMILY_IK",
    "CutVertexReport",
    "SearchBudget",
    "SearchReport",
    "TreeBlowupReport",
    "candidate_parts",
    "explore_cut_conjecture",
    "lemma_clique_table",
    "lemma_independent_table",
    "report_to_json",
    "report_tsv_line",
    "search_blowups",
    "verify_lemma_clique",
    "verify_lemma_independent",
    "verify_tree_theorem",
]

FAMILY_IK = "ik"
FAMILY_ALL = "all"

_ALL_FAMILY_SIZE_CAP = 5
_LEMMA_SIZE_CAP = 5
_TREE_THEOREM_CAP = 7
_CUT_CONJECTURE_CAP = 6


@dataclass(frozen=True)
class SearchBudget:
    """Bounds on the assignment space a search is allowed to cover."""

    part_family: str = FAMILY_IK
    max_part_size: int = 4
    max_total_vertices: int | None = None
    time_limit: float | None = None

    def __post_init__(self):
        if self.part_family not in (FAMILY_IK, FAMILY_ALL):
            raise ValueError(f"unknown part family {self.part_family!r}")
        if self.max_part_size < 1:
            raise ValueError("max_part_size must be >= 1")
        if self.part_family == FAMILY_ALL and self.max_part_size > _ALL_FAMILY_SIZE_CAP:
            raise ValueError(
                f"family {FAMILY_ALL!r} supports max_part_size <= {_ALL_FAMILY_SIZE_CAP}"
            )
        if self.max_total_vertices is not None and self.max_total_vertices < 2:
            raise ValueError("max_total_vertices must be >= 2")
        if self.time_limit is not None and self.time_limit <= 0:
            raise ValueError("time_limit must be positive")


@dataclass
class SearchReport:
    """Outcome of one exhaustive scan over a base graph."""

    base: Graph
    budget: SearchBudget
    found: list[BlowupSpec]
    exhausted: bool
    specs_examined: int


def candidate_parts(budget: SearchBudget) -> tuple[PartDescriptor, ...]:
    """The deterministic candidate list one base vertex ranges over."""
    if budget.part_family == FAMILY_IK:
        out = [PartDescriptor.independent(1)]
        for s in range(2, budget.max_part_size + 1):
            out.append(PartDescriptor.independent(s))
            out.append(PartDescriptor.clique(s))
        return tuple(out)
    out = []
    for s in range(1, budget.max_part_size + 1):
        out.extend(PartDescriptor.for_graph(g) for g in enumerate_graphs(s))
    return tuple(out)


# ---------------------------------------------------------------------------
# the screen: exact uniformity decision without building Graph objects


def _blowup_adjacency(base: Graph, parts) -> np.ndarray:
    sizes = [p.n_vertices for p in parts]
    offs = [0]
    for s in sizes:
        offs.append(offs[-1] + s)
    n = offs[-1]
    a = np.zeros((n, n), dtype=np.int64)
    for i, p in enumerate(parts):
        lo, hi = offs[i], offs[i + 1]
        if p.kind == PART_CLIQUE:
            a[lo:hi, lo:hi] = 1
        elif p.kind == PART_EXPLICIT:
            for u, v in p.graph.edges:
                a[lo + u, lo + v] = 1
                a[lo + v, lo + u] = 1
    for i, j in base.edges:
        a[offs[i] : offs[i + 1], offs[j] : offs[j + 1]] = 1
        a[offs[j] : offs[j + 1], offs[i] : offs[i + 1]] = 1
    np.fill_diagonal(a, 0)
    return a


def _pair_matrices(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Distance matrix (-1 unreachable) and geodesic-count matrix.

    Walks of length equal to the distance are exactly the geodesics, so
    masked powers of the adjacency matrix count them.  The loop stops as
    soon as a power adds no new pair, which bounds the entries well
    inside int64 for the graph sizes searched here.
    """
    n = a.shape[0]
    dist = np.full((n, n), -1, dtype=np.int64)
    np.fill_diagonal(dist, 0)
    counts = np.eye(n, dtype=np.int64)
    power = a.copy()
    step = 1
    while True:
        mask = (dist == -1) & (power > 0)
        if not mask.any():
            break
        dist[mask] = step
        counts[mask] = power[mask]
        if not (dist == -1).any():
            break
        power = power @ a
        step += 1
    return dist, counts


def _betweenness_at(dist: np.ndarray, counts: np.ndarray, x: int) -> Fraction:
    """Exact betweenness of one vertex from the pair matrices."""
    dx = dist[x]
    reach = dx >= 0
    on = (dx[:, None] + dx[None, :] == dist) & (dist >= 2)
    on &= reach[:, None] & reach[None, :]
    on[x, :] = False
    on[:, x] = False
    uu, vv = np.nonzero(np.triu(on, 1))
    if len(uu) == 0:
        return Fraction(0)
    nums = counts[uu, x] * counts[x, vv]
    dens = counts[uu, vv]
    by_den: dict[int, int] = {}
    for num, den in zip(nums.tolist(), dens.tolist()):
        by_den[den] = by_den.get(den, 0) + num
    total = Fraction(0)
    for den, num in sorted(by_den.items()):
        total += Fraction(num, den)
    return total


def _screen_uniform(base: Graph, parts) -> bool:
    """Exact uniformity of the blow-up, one representative per I/K part.

    Sound in both directions: representatives of explicit parts cover
    every vertex, and inside I/K parts all vertices are automorphic.
    """
    a = _blowup_adjacency(base, parts)
    dist, counts = _pair_matrices(a)
    first: Fraction | None = None
    offset = 0
    for p in parts:
        size = p.n_vertices
        reps = range(offset, offset + size) if p.kind == PART_EXPLICIT else (offset,)
        for r in reps:
            val = _betweenness_at(dist, counts, r)
            if first is None:
                first = val
            elif val != first:
                return False
        offset += size
    return True


def _verify_hit(spec: BlowupSpec) -> None:
    # Screen positives must survive both full algorithms; a mismatch is a
    # bug in this module and is raised, never swallowed.
    bg = blow_up(spec)
    exact = betweenness_exact(bg.graph)
    if not profile_uniformity(exact).uniform:
        raise RuntimeError(f"screen accepted non-uniform spec {spec.label()}")
    if betweenness_oracle(bg.graph) != exact:
        raise RuntimeError(f"betweenness algorithms disagree on {spec.label()}")


# ---------------------------------------------------------------------------
# the search proper


def _decode_parts(index: int, cand_lists) -> tuple[PartDescriptor, ...]:
    parts: list[PartDescriptor] = []
    for cands in reversed(cand_lists):
        index, digit = divmod(index, len(cands))
        parts.append(cands[digit])
    parts.reverse()
    return tuple(parts)


def _scan_task(args) -> tuple[int, list[tuple[int, tuple[PartDescriptor, ...]]], bool]:
    base, cand_lists, lo, hi, max_total, deadline = args
    examined = 0
    found: list[tuple[int, tuple[PartDescriptor, ...]]] = []
    completed = True
    for idx in range(lo, hi):
        if deadline is not None and time.time() > deadline:
            completed = False
            break
        parts = _decode_parts(idx, cand_lists)
        if max_total is not None and sum(p.n_vertices for p in parts) > max_total:
            continue
        examined += 1
        if _screen_uniform(base, parts):
            found.append((idx, parts))
    return examined, found, completed


def search_blowups(
    base: Graph, budget: SearchBudget, *, jobs: int = 1, prune: bool = True
) -> SearchReport:
    """Test every in-budget part assignment on ``base`` for uniformity.

    ``specs_examined`` counts assignments actually tested (pruned and
    over-size ones are outside the budgeted space).  ``exhausted`` is
    True iff the whole space was covered, so an empty ``found`` with
    ``exhausted=True`` is a proof within the budget.
    """
    if base.n < 2:
        raise ValueError("search base needs at least two vertices")
    if not is_connected(base):
        raise ValueError("search base must be connected")
    cands = candidate_parts(budget)
    cuts = set(cut_vertices(base)) if prune else set()
    cand_lists = []
    for v in range(base.n):
        if v in cuts:
            cand_lists.append(tuple(c for c in cands if c.n_vertices > 1))
        else:
            cand_lists.append(cands)
    space = prod(len(c) for c in cand_lists)
    deadline = time.time() + budget.time_limit if budget.time_limit is not None else None

    raw_found: list[tuple[int, tuple[PartDescriptor, ...]]] = []
    if jobs <= 1 or space < 256:
        examined, raw_found, completed = _scan_task(
            (base, cand_lists, 0, space, budget.max_total_vertices, deadline)
        )
        exhausted = completed
    else:
        chunk = max(1, -(-space // (jobs * 8)))
        tasks = [
            (base, cand_lists, lo, min(lo + chunk, space), budget.max_total_vertices, deadline)
            for lo in range(0, space, chunk)
        ]
        examined = 0
        exhausted = True
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            for exa, hits, completed in pool.map(_scan_task, tasks):
                examined += exa
                raw_found.extend(hits)
                exhausted = exhausted and completed

    found = []
    for _, parts in sorted(raw_found, key=lambda t: t[0]):
        spec = BlowupSpec(base=base, parts=parts)
        _verify_hit(spec)
        found.append(spec)
    return SearchReport(
        base=base,
        budget=budget,
        found=found,
        exhausted=exhausted,
        specs_examined=examined,
    )


# ---------------------------------------------------------------------------
# lemma verification: which middle/end part maximizes the x/y ratio


def _check_lemma_args(m: int, fixed) -> None:
    if not (1 <= m <= _LEMMA_SIZE_CAP):
        raise ValueError(f"lemma verification supports 1 <= m <= {_LEMMA_SIZE_CAP}")
    if any(s < 1 for s in fixed):
        raise ValueError("fixed part sizes must be positive")


def lemma_independent_table(m: int, a: int, c: int, d: int) -> list[tuple[Graph, Fraction]]:
    """Ratio value for every class H on m vertices placed second in
    path4[K_a, H, I_c, K_d], extremal-pair convention."""
    _check_lemma_args(m, (a, c, d))
    base = generate("path", 4)
    rows = []
    for h in enumerate_graphs(m):
        spec = BlowupSpec(
            base=base,
            parts=(
                PartDescriptor.clique(a),
                PartDescriptor.for_graph(h),
                PartDescriptor.independent(c),
                PartDescriptor.clique(d),
            ),
        )
        rows.append((h, delta_extremal(spec).value))
    return rows


def lemma_clique_table(m: int, b: int, c: int, d: int) -> list[tuple[Graph, Fraction]]:
    """Ratio value for every class H on m vertices placed first in
    path4[H, I_b, I_c, K_d]."""
    _check_lemma_args(m, (b, c, d))
    base = generate("path", 4)
    rows = []
    for h in enumerate_graphs(m):
        spec = BlowupSpec(
            base=base,
            parts=(
                PartDescriptor.for_graph(h),
                PartDescriptor.independent(b),
                PartDescriptor.independent(c),
                PartDescriptor.clique(d),
            ),
        )
        rows.append((h, delta_extremal(spec).value))
    return rows


def verify_lemma_independent(m: int, a: int, c: int, d: int) -> bool:
    """True iff the edgeless class attains the exact maximum ratio."""
    rows = lemma_independent_table(m, a, c, d)
    best = max(v for _, v in rows)
    empty_val = next(v for h, v in rows if h.edge_count == 0)
    return empty_val == best


def verify_lemma_clique(m: int, b: int, c: int, d: int) -> bool:
    """True iff the complete class attains the exact maximum ratio."""
    rows = lemma_clique_table(m, b, c, d)
    best = max(v for _, v in rows)
    full = m * (m - 1) // 2
    complete_val = next(v for h, v in rows if h.edge_count == full)
    return complete_val == best


# ---------------------------------------------------------------------------
# structured sweeps


@dataclass
class TreeBlowupReport:
    """Verdict for one tree base: searched empty, or a known construction."""

    tree: Graph
    diameter: int
    status: str  # "searched" | "construction" | "too_small"
    search: SearchReport | None = None
    construction: BlowupSpec | None = None
    construction_value: Fraction | None = None


def verify_tree_theorem(
    n_max: int, budget: SearchBudget, *, jobs: int = 1
) -> list[TreeBlowupReport]:
    """Classify every tree on up to n_max vertices.

    Diameter >= 3 trees get an exhaustive in-budget search (expected
    empty); smaller-diameter trees get an explicit uniform blow-up.
    The single-vertex tree is too small to be a base.
    """
    if not (1 <= n_max <= _TREE_THEOREM_CAP):
        raise ValueError(f"tree sweep supports 1 <= n_max <= {_TREE_THEOREM_CAP}")
    out: list[TreeBlowupReport] = []
    for n in range(1, n_max + 1):
        for tree in enumerate_trees(n):
            if n == 1:
                out.append(TreeBlowupReport(tree=tree, diameter=0, status="too_small"))
                continue
            diam = diameter(tree)
            if diam >= 3:
                report = search_blowups(tree, budget, jobs=jobs)
                out.append(
                    TreeBlowupReport(
                        tree=tree, diameter=diam, status="searched", search=report
                    )
                )
                continue
            spec = p2_clique_spec(2) if n == 2 else star_spec((1,) * (n - 1))
            if not is_isomorphic(spec.base, tree):
                raise AssertionError("construction base does not match the tree")
            bg = blow_up(spec)
            uni = profile_uniformity(betweenness_exact(bg.graph))
            if not uni.uniform:
                raise AssertionError(f"stock construction failed for {spec.label()}")
            out.append(
                TreeBlowupReport(
                    tree=tree,
                    diameter=diam,
                    status="construction",
                    construction=spec,
                    construction_value=uni.common,
                )
            )
    return out


@dataclass
class CutVertexReport:
    """Search outcome for one connected base with a cut vertex and
    diameter >= 3.  A non-empty ``found`` would be a counterexample to
    the expectation that no such base has a uniform blow-up."""

    graph: Graph
    search: SearchReport


def explore_cut_conjecture(
    n_max: int, budget: SearchBudget, *, jobs: int = 1
) -> list[CutVertexReport]:
    if not (2 <= n_max <= _CUT_CONJECTURE_CAP):
        raise ValueError(f"cut-vertex sweep supports 2 <= n_max <= {_CUT_CONJECTURE_CAP}")
    out: list[CutVertexReport] = []
    for n in range(2, n_max + 1):
        for g in enumerate_graphs(n):
            if not is_connected(g) or not cut_vertices(g):
                continue
            if diameter(g) < 3:
                continue
            out.append(CutVertexReport(graph=g, search=search_blowups(g, budget, jobs=jobs)))
    return out


# ---------------------------------------------------------------------------
# serialization


def budget_to_json(budget: SearchBudget) -> dict:
    return {
        "part_family": budget.part_family,
        "max_part_size": budget.max_part_size,
        "max_total_vertices": budget.max_total_vertices,
        "time_limit": budget.time_limit,
    }


def report_to_json(report: SearchReport) -> dict:
    return {
        "base": serialize_graph6(report.base),
        "budget": budget_to_json(report.budget),
        "specs_examined": report.specs_examined,
        "exhausted": report.exhausted,
        "found": [spec_to_json(s) for s in report.found],
    }


def report_tsv_line(report: SearchReport) -> str:
    """base graph6, specs examined, hits, exhausted -- tab separated."""
    return "\t".join(
        (
            serialize_graph6(report.base),
            str(report.specs_examined),
            str(len(report.found)),
            "true" if report.exhausted else "false",
        )
    )
