"""End-to-end verification suite.

Twelve numbered checks cover the whole library: agreement of the two
betweenness algorithms over every small graph class, uniformity of the
stock blow-up families (with negative controls), the exact
decomposition identity and its closed forms on a seeded random corpus,
the extremal-part lemmas on full grids, the path-4 impossibility (both
the integer inequality chain and an exhausted empty search), the
tree sweeps, and a cut-vertex exploration.  A registry collects every
betweenness-uniform graph the run produces and every claimed-empty
search so the final sanity check can audit them in one place.

``level`` widens the path-4 search budget: "quick" scans part sizes up
to 4, "full" up to 6.  Results are deterministic for either level and
any job count.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from .betweenness import (
    betweenness_exact,
    betweenness_oracle,
    format_rational,
    profile_uniformity,
)
from .blowup import (
    BlowupSpec,
    PartDescriptor,
    blow_up,
    closed_form_neighbor_contribution,
    decompose_betweenness,
    global_leaf_neighbor_formula,
)
from .constructions import (
    P4SizeTuple,
    p2_clique_spec,
    p3_independent_spec,
    p4_infeasibility_check,
    p4_mixed_spec,
    star_spec,
)
from .graphs import (
    Graph,
    diameter,
    enumerate_graphs,
    enumerate_trees,
    generate,
    is_connected,
    is_isomorphic,
    is_two_connected,
    serialize_graph6,
)
from .search import (
    FAMILY_ALL,
    FAMILY_IK,
    SearchBudget,
    SearchReport,
    explore_cut_conjecture,
    search_blowups,
    verify_lemma_clique,
    verify_lemma_independent,
    verify_tree_theorem,
)

__all__ = ["CriterionResult", "run_suite", "CRITERIA"]

_CORPUS_SEED = 20260819
_CORPUS_SIZE = 200


@dataclass
class CriterionResult:
    number: int
    name: str
    passed: bool
    detail: str
    seconds: float

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        return f"[{self.number:2d}] {verdict}  {self.name} ({self.seconds:.1f}s): {self.detail}"


@dataclass
class _Registry:
    """Everything later audited by the sanity criterion."""

    uniform_graphs: dict[str, str] = field(default_factory=dict)  # graph6 -> source
    empty_claims: list[tuple[str, SearchReport]] = field(default_factory=list)

    def add_uniform(self, g: Graph, source: str) -> None:
        # only connected graphs enter: the two-connectivity fact is about
        # connected uniform graphs, and all blow-ups here are connected
        if is_connected(g):
            self.uniform_graphs.setdefault(serialize_graph6(g), source)

    def add_claim(self, source: str, report: SearchReport) -> None:
        if not report.found:
            self.empty_claims.append((source, report))


def _record_search(reg: _Registry, source: str, report: SearchReport) -> None:
    for spec in report.found:
        reg.add_uniform(blow_up(spec).graph, source)
    reg.add_claim(source, report)


# ---------------------------------------------------------------------------
# criteria


def _c1_oracle_equivalence(reg: _Registry, level: str, jobs: int) -> tuple[bool, str]:
    checked = 0
    for n in range(8):
        for g in enumerate_graphs(n):
            exact = betweenness_exact(g)
            if exact != betweenness_oracle(g):
                return False, f"algorithms disagree on {serialize_graph6(g)}"
            checked += 1
            if g.n >= 3 and profile_uniformity(exact).uniform:
                reg.add_uniform(g, "enumeration")
    return True, f"both algorithms agree on all {checked} classes with <= 7 vertices"


def _c2_c4_blowup(reg: _Registry, level: str, jobs: int) -> tuple[bool, str]:
    spec = BlowupSpec(
        base=generate("path", 3),
        parts=(
            PartDescriptor.clique(1),
            PartDescriptor.independent(2),
            PartDescriptor.clique(1),
        ),
    )
    g = blow_up(spec).graph
    if not is_isomorphic(g, generate("cycle", 4)):
        return False, f"{spec.label()} is not the 4-cycle"
    uni = profile_uniformity(betweenness_oracle(g))
    if not (uni.uniform and uni.common == Fraction(1, 2)):
        return False, f"{spec.label()} profile wrong: {uni}"
    reg.add_uniform(g, "path3 unit blow-up")
    return True, f"{spec.label()} is the 4-cycle, uniform at 1/2"


def _c3_p3_family(reg: _Registry, level: str, jobs: int) -> tuple[bool, str]:
    for a in range(1, 7):
        for b in range(1, 7):
            spec = p3_independent_spec(a, b)
            uni = profile_uniformity(betweenness_exact(blow_up(spec).graph))
            if not uni.uniform:
                return False, f"{spec.label()} not uniform"
            reg.add_uniform(blow_up(spec).graph, "path3 family")
    return True, "all 36 path3 independent-set blow-ups uniform (sizes 1..6)"


def _c4_star_family(reg: _Registry, level: str, jobs: int) -> tuple[bool, str]:
    cases = 0
    for k in range(1, 5):
        for sizes in product(range(1, 5), repeat=k):
            spec = star_spec(sizes)
            g = blow_up(spec).graph
            uni = profile_uniformity(betweenness_exact(g))
            if not uni.uniform:
                return False, f"{spec.label()} not uniform"
            reg.add_uniform(g, "star family")
            cases += 1
    # negative controls: a center of the wrong size must break uniformity
    controls = 0
    for sizes in ((1, 1), (2, 1), (2, 2, 2), (1, 2, 3), (4, 4, 4, 4)):
        total = sum(sizes)
        for center in (total - 1, total + 1):
            if center < 1:
                continue
            spoiled = BlowupSpec(
                base=generate("star", len(sizes)),
                parts=tuple(PartDescriptor.independent(s) for s in sizes)
                + (PartDescriptor.independent(center),),
            )
            uni = profile_uniformity(betweenness_exact(blow_up(spoiled).graph))
            if uni.uniform:
                return False, f"negative control {spoiled.label()} is uniform"
            controls += 1
    return True, f"{cases} star blow-ups uniform; {controls} perturbed centers all non-uniform"


def _c5_p2_family(reg: _Registry, level: str, jobs: int) -> tuple[bool, str]:
    for m in range(1, 9):
        spec = p2_clique_spec(m)
        g = blow_up(spec).graph
        uni = profile_uniformity(betweenness_exact(g))
        if not (uni.uniform and uni.common == 0):
            return False, f"{spec.label()}: {uni}"
        reg.add_uniform(g, "path2 clique family")
    return True, "path2 clique blow-ups uniform at 0 for sizes 1..8"


def _corpus_specs() -> list[BlowupSpec]:
    rng = random.Random(_CORPUS_SEED)
    bases = [t for n in range(2, 6) for t in enumerate_trees(n)]
    pool = [g for s in (1, 2, 3) for g in enumerate_graphs(s)]
    specs = []
    for _ in range(_CORPUS_SIZE):
        base = rng.choice(bases)
        parts = tuple(PartDescriptor.for_graph(rng.choice(pool)) for _ in range(base.n))
        specs.append(BlowupSpec(base=base, parts=parts))
    return specs


def _c6_decomposition(reg: _Registry, level: str, jobs: int) -> tuple[bool, str]:
    vertices = 0
    for spec in _corpus_specs():
        bg = blow_up(spec)
        profile = betweenness_exact(bg.graph)
        for v in range(bg.graph.n):
            dec = decompose_betweenness(bg, v)
            if dec.total() != profile[v]:
                return False, f"decomposition mismatch at vertex {v} of {spec.label()}"
            vertices += 1
    return True, f"identity exact at all {vertices} vertices of {_CORPUS_SIZE} random specs"


def _c7_closed_forms(reg: _Registry, level: str, jobs: int) -> tuple[bool, str]:
    neighbor_checks = 0
    global_checks = 0
    for spec in _corpus_specs():
        bg = blow_up(spec)
        decs = [decompose_betweenness(bg, v) for v in range(bg.graph.n)]
        for i, j in spec.base.edges:
            for pi, pj in ((i, j), (j, i)):
                want = closed_form_neighbor_contribution(spec, bg, pi, pj)
                for x in bg.part_vertices[pi]:
                    if decs[x].neighbor_locals[pj] != want:
                        return False, (
                            f"closed form for parts {pi}->{pj} of {spec.label()} "
                            f"disagrees at vertex {x}"
                        )
                    neighbor_checks += 1
        for leaf in range(spec.base.n):
            if spec.base.degree(leaf) != 1:
                continue
            (j,) = spec.base.adjacency[leaf]
            if spec.base.degree(j) > 2:
                continue
            for y in bg.part_vertices[j]:
                want = global_leaf_neighbor_formula(spec, bg, y, leaf_part=leaf)
                if decs[y].global_part != want:
                    return False, (
                        f"leaf-global formula at part {j} of {spec.label()} "
                        f"disagrees at vertex {y}"
                    )
                global_checks += 1
    return True, (
        f"{neighbor_checks} neighbor-part closed forms and "
        f"{global_checks} leaf-global values all exact"
    )


def _c8_lemmas(reg: _Registry, level: str, jobs: int) -> tuple[bool, str]:
    grid = list(product((1, 2, 3), repeat=3))
    for m in range(1, 5):
        for a, c, d in grid:
            if not verify_lemma_independent(m, a, c, d):
                return False, f"independent-part lemma fails at m={m}, (a,c,d)=({a},{c},{d})"
        for b, c, d in grid:
            if not verify_lemma_clique(m, b, c, d):
                return False, f"clique-part lemma fails at m={m}, (b,c,d)=({b},{c},{d})"
    return True, "both extremal-part lemmas hold for m <= 4 over the full 27-point grids"


def _c9_p4_infeasible(reg: _Registry, level: str, jobs: int) -> tuple[bool, str]:
    t0 = time.time()
    for a in range(1, 21):
        for b in range(1, 21):
            for c in range(1, 21):
                for d in range(1, 21):
                    rep = p4_infeasibility_check(P4SizeTuple(a, b, c, d))
                    if not rep.combined_violated:
                        return False, f"inequality chain not violated at {(a, b, c, d)}"
    grid_secs = time.time() - t0
    max_size = 6 if level == "full" else 4
    budget = SearchBudget(part_family=FAMILY_IK, max_part_size=max_size)
    report = search_blowups(generate("path", 4), budget, jobs=jobs)
    _record_search(reg, "path4 search", report)
    if report.found or not report.exhausted:
        return False, (
            f"path4 search: found={len(report.found)}, exhausted={report.exhausted}"
        )
    return True, (
        f"all 160000 size tuples violate the inequality chain ({grid_secs:.1f}s); "
        f"path4 search (sizes <= {max_size}) exhausted {report.specs_examined} specs, none uniform"
    )


def _c10_tree_sweeps(reg: _Registry, level: str, jobs: int) -> tuple[bool, str]:
    searched = 0
    ik = SearchBudget(part_family=FAMILY_IK, max_part_size=4)
    for tr in verify_tree_theorem(6, ik, jobs=jobs):
        if tr.status == "construction":
            reg.add_uniform(blow_up(tr.construction).graph, "tree construction")
        elif tr.status == "searched":
            name = f"tree {serialize_graph6(tr.tree)} I/K sweep"
            _record_search(reg, name, tr.search)
            if tr.search.found or not tr.search.exhausted:
                return False, f"{name}: found={len(tr.search.found)}, exhausted={tr.search.exhausted}"
            searched += 1
    all3 = SearchBudget(part_family=FAMILY_ALL, max_part_size=3)
    for tr in verify_tree_theorem(5, all3, jobs=jobs):
        if tr.status == "searched":
            name = f"tree {serialize_graph6(tr.tree)} all-parts sweep"
            _record_search(reg, name, tr.search)
            if tr.search.found or not tr.search.exhausted:
                return False, f"{name}: found={len(tr.search.found)}, exhausted={tr.search.exhausted}"
            searched += 1
    return True, (
        f"{searched} exhaustive tree-base searches all empty "
        "(long trees <= 6 with I/K parts <= 4; <= 5 with arbitrary parts <= 3)"
    )


def _c12_cut_conjecture(reg: _Registry, level: str, jobs: int) -> tuple[bool, str]:
    budget = SearchBudget(part_family=FAMILY_IK, max_part_size=4)
    reports = explore_cut_conjecture(5, budget, jobs=jobs)
    hits = []
    for cv in reports:
        _record_search(reg, f"cut-vertex base {serialize_graph6(cv.graph)}", cv.search)
        hits.extend(cv.search.found)
        if not cv.search.exhausted:
            return False, f"search on {serialize_graph6(cv.graph)} not exhausted"
    if hits:
        # a uniform blow-up of a cut-vertex base would be a counterexample
        # worth reporting loudly, not a defect in this library
        labels = ", ".join(s.label() for s in hits)
        return True, f"COUNTEREXAMPLES to the cut-vertex expectation: {labels}"
    return True, f"no uniform blow-ups over {len(reports)} cut-vertex bases (sizes <= 4)"


def _c11_sanity(reg: _Registry, level: str, jobs: int) -> tuple[bool, str]:
    from .graphs import parse_graph6

    for g6, source in reg.uniform_graphs.items():
        g = parse_graph6(g6)
        if g.n >= 3 and not is_two_connected(g):
            return False, f"uniform graph {g6} from {source} is not two-connected"
    for source, report in reg.empty_claims:
        if not report.exhausted:
            return False, f"empty claim from {source} was not exhausted"
    return True, (
        f"{len(reg.uniform_graphs)} distinct uniform graphs all two-connected; "
        f"{len(reg.empty_claims)} empty-search claims all exhausted"
    )


CRITERIA = [
    (1, "dual-algorithm agreement on every small graph", _c1_oracle_equivalence),
    (2, "unit path3 blow-up is the uniform 4-cycle", _c2_c4_blowup),
    (3, "path3 independent-set family uniform", _c3_p3_family),
    (4, "star family uniform with negative controls", _c4_star_family),
    (5, "path2 clique family uniform at zero", _c5_p2_family),
    (6, "decomposition identity on random corpus", _c6_decomposition),
    (7, "closed forms match first-principles decomposition", _c7_closed_forms),
    (8, "extremal-part lemmas on full grids", _c8_lemmas),
    (9, "path4 infeasibility: inequalities and search", _c9_p4_infeasible),
    (10, "tree sweeps: no uniform blow-up of a long tree", _c10_tree_sweeps),
    (11, "sanity: uniform graphs two-connected, claims exhausted", _c11_sanity),
    (12, "cut-vertex bases: exploratory search", _c12_cut_conjecture),
]


def run_suite(level: str = "quick", jobs: int = 1, out=print) -> list[CriterionResult]:
    """Run all criteria, print one verdict line each, return the results.

    The sanity audit (11) runs last so it sees everything the other
    criteria produced, but results are reported in numeric order.
    """
    if level not in ("quick", "full"):
        raise ValueError(f"unknown level {level!r}")
    reg = _Registry()
    results = []
    ordered = [c for c in CRITERIA if c[0] != 11] + [c for c in CRITERIA if c[0] == 11]
    for number, name, fn in ordered:
        t0 = time.time()
        try:
            passed, detail = fn(reg, level, jobs)
        except Exception as exc:  # noqa: BLE001 - a crash is a failed criterion
            passed, detail = False, f"crashed: {type(exc).__name__}: {exc}"
        results.append(CriterionResult(number, name, passed, detail, time.time() - t0))
    results.sort(key=lambda r: r.number)
    if out is not None:
        for r in results:
            out(r.line())
        verdict = "ALL PASS" if all(r.passed for r in results) else "FAILURES PRESENT"
        out(f"== {verdict} ({sum(r.seconds for r in results):.1f}s total, level={level}) ==")
    return results
