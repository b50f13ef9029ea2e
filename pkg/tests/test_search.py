"""Search screen soundness, budgets, pruning, determinism, sweeps."""

from __future__ import annotations

import json

import numpy as np
import pytest
from hypothesis import given, settings

from bugraph.betweenness import betweenness_exact, is_betweenness_uniform, shortest_path_data
from bugraph.blowup import blow_up, spec_from_json
from bugraph.graphs import Graph, diameter, generate, is_isomorphic, serialize_graph6
from bugraph.search import (
    SearchBudget,
    _betweenness_at,
    _blowup_adjacency,
    _pair_matrices,
    _screen_uniform,
    candidate_parts,
    explore_cut_conjecture,
    lemma_clique_table,
    report_to_json,
    report_tsv_line,
    search_blowups,
    verify_lemma_clique,
    verify_lemma_independent,
    verify_tree_theorem,
)

from test_blowup import blowup_specs


class TestScreen:
    @given(blowup_specs(max_base=4, max_part=3))
    @settings(max_examples=60, deadline=None)
    def test_adjacency_matches_blowup(self, spec):
        a = _blowup_adjacency(spec.base, spec.parts)
        g = blow_up(spec).graph
        want = np.zeros((g.n, g.n), dtype=np.int64)
        for u, v in g.edges:
            want[u, v] = want[v, u] = 1
        assert np.array_equal(a, want)

    @given(blowup_specs(max_base=4, max_part=3))
    @settings(max_examples=40, deadline=None)
    def test_pair_matrices_match_bfs(self, spec):
        g = blow_up(spec).graph
        dist, counts = _pair_matrices(_blowup_adjacency(spec.base, spec.parts))
        bfs_dist, bfs_sigma = shortest_path_data(g)
        assert dist.tolist() == bfs_dist
        assert counts.tolist() == bfs_sigma

    @given(blowup_specs(max_base=4, max_part=3))
    @settings(max_examples=40, deadline=None)
    def test_vertex_values_match_exact(self, spec):
        g = blow_up(spec).graph
        dist, counts = _pair_matrices(_blowup_adjacency(spec.base, spec.parts))
        profile = betweenness_exact(g)
        for v in range(g.n):
            assert _betweenness_at(dist, counts, v) == profile[v]

    @given(blowup_specs(max_base=4, max_part=3))
    @settings(max_examples=60, deadline=None)
    def test_uniform_verdict_matches_exact(self, spec):
        want = is_betweenness_uniform(blow_up(spec).graph).uniform
        assert _screen_uniform(spec.base, spec.parts) == want

    def test_disconnected_pair_matrices(self):
        a = np.zeros((3, 3), dtype=np.int64)
        a[0, 1] = a[1, 0] = 1
        dist, counts = _pair_matrices(a)
        assert dist[0, 2] == -1 and counts[0, 2] == 0


class TestCandidates:
    def test_ik_order_and_dedup(self):
        b = SearchBudget(part_family="ik", max_part_size=3)
        assert [c.label() for c in candidate_parts(b)] == ["I1", "I2", "K2", "I3", "K3"]

    def test_all_family_covers_every_class(self):
        b = SearchBudget(part_family="all", max_part_size=3)
        labels = [c.label() for c in candidate_parts(b)]
        assert len(labels) == 1 + 2 + 4
        assert labels[0] == "I1"
        assert sum(1 for s in labels if s.startswith("X")) == 2

    def test_budget_validation(self):
        with pytest.raises(ValueError):
            SearchBudget(part_family="weird")
        with pytest.raises(ValueError):
            SearchBudget(max_part_size=0)
        with pytest.raises(ValueError):
            SearchBudget(part_family="all", max_part_size=6)
        with pytest.raises(ValueError):
            SearchBudget(time_limit=0)
        with pytest.raises(ValueError):
            SearchBudget(max_total_vertices=1)


class TestSearch:
    def test_path3_family_found(self):
        rep = search_blowups(generate("path", 3), SearchBudget(part_family="ik", max_part_size=4))
        labels = {s.label() for s in rep.found}
        assert "Bg[I1,I2,I1]" in labels
        assert "Bg[I2,I4,I2]" in labels
        assert rep.exhausted
        # nothing outside the independent-set family shows up
        assert all("K" not in lab.split("[")[1] for lab in labels)

    def test_edge_base_finds_balanced_pairs(self):
        rep = search_blowups(generate("path", 2), SearchBudget(part_family="ik", max_part_size=3))
        labels = {s.label() for s in rep.found}
        assert {"A_[K2,K2]", "A_[I3,I3]", "A_[K2,K3]"} <= labels

    def test_path4_empty_and_exhausted(self):
        rep = search_blowups(generate("path", 4), SearchBudget(part_family="ik", max_part_size=3))
        assert rep.found == [] and rep.exhausted
        assert rep.specs_examined == 5 * 4 * 4 * 5

    @pytest.mark.parametrize("base", [generate("path", 2), generate("path", 3), generate("cycle", 3)])
    def test_pruning_changes_nothing_found(self, base):
        b = SearchBudget(part_family="ik", max_part_size=3)
        pruned = search_blowups(base, b)
        full = search_blowups(base, b, prune=False)
        assert [s.label() for s in pruned.found] == [s.label() for s in full.found]
        assert pruned.specs_examined <= full.specs_examined

    def test_triangle_base_keeps_unit_parts(self):
        # no cut vertices on a cycle, so unit parts stay; K_4 arises as
        # the (2,1,1) mixed blow-up and must be reported
        rep = search_blowups(generate("cycle", 3), SearchBudget(part_family="ik", max_part_size=2))
        assert "Bw[K2,I1,I1]" in {s.label() for s in rep.found}

    def test_jobs_do_not_change_output(self):
        base = generate("path", 4)
        b = SearchBudget(part_family="ik", max_part_size=4)
        r1 = search_blowups(base, b, jobs=1)
        r2 = search_blowups(base, b, jobs=2)
        assert json.dumps(report_to_json(r1)) == json.dumps(report_to_json(r2))

    def test_time_limit_partial(self):
        rep = search_blowups(
            generate("path", 4),
            SearchBudget(part_family="ik", max_part_size=4, time_limit=1e-9),
        )
        assert not rep.exhausted

    def test_max_total_vertices(self):
        b_all = SearchBudget(part_family="ik", max_part_size=4)
        b_cap = SearchBudget(part_family="ik", max_part_size=4, max_total_vertices=6)
        full = search_blowups(generate("path", 3), b_all)
        capped = search_blowups(generate("path", 3), b_cap)
        assert capped.specs_examined < full.specs_examined
        assert all(s.total_vertices <= 6 for s in capped.found)
        assert {s.label() for s in capped.found} == {
            s.label() for s in full.found if s.total_vertices <= 6
        }

    def test_rejects_bad_base(self):
        with pytest.raises(ValueError):
            search_blowups(Graph(1), SearchBudget())
        with pytest.raises(ValueError):
            search_blowups(Graph(3, ((0, 1),)), SearchBudget())

    def test_all_family_on_edge_base(self):
        rep = search_blowups(generate("path", 2), SearchBudget(part_family="all", max_part_size=2))
        assert {s.label() for s in rep.found} == {
            "A_[I1,I1]",
            "A_[I1,K2]",
            "A_[K2,I1]",
            "A_[I2,I2]",
            "A_[K2,K2]",
        }


class TestLemmas:
    @pytest.mark.parametrize("m", (1, 2, 3))
    def test_independent_maximizer(self, m):
        assert verify_lemma_independent(m, 1, 1, 1)
        assert verify_lemma_independent(m, 2, 1, 2)

    @pytest.mark.parametrize("m", (1, 2, 3))
    def test_clique_maximizer(self, m):
        assert verify_lemma_clique(m, 1, 1, 1)
        assert verify_lemma_clique(m, 2, 2, 1)

    def test_clique_table_is_monotone_like(self):
        rows = lemma_clique_table(3, 1, 1, 1)
        by_edges = {h.edge_count: v for h, v in rows}
        assert by_edges[3] == max(v for _, v in rows)

    def test_size_cap(self):
        with pytest.raises(ValueError):
            verify_lemma_independent(6, 1, 1, 1)


class TestSweeps:
    def test_tree_theorem_small(self):
        reports = verify_tree_theorem(4, SearchBudget(part_family="ik", max_part_size=3))
        by_status = {}
        for r in reports:
            by_status.setdefault(r.status, []).append(r)
        assert len(by_status["too_small"]) == 1
        assert len(by_status["construction"]) == 3  # K2, path3, 4-star
        (searched,) = by_status["searched"]
        assert diameter(searched.tree) == 3
        assert searched.search.found == [] and searched.search.exhausted

    def test_tree_theorem_cap(self):
        with pytest.raises(ValueError):
            verify_tree_theorem(8, SearchBudget())

    def test_cut_conjecture_smallest(self):
        reports = explore_cut_conjecture(4, SearchBudget(part_family="ik", max_part_size=3))
        assert len(reports) == 1  # only the 4-path qualifies
        assert is_isomorphic(reports[0].graph, generate("path", 4))
        assert reports[0].search.found == []


class TestReportSerialization:
    def test_tsv_line(self):
        rep = search_blowups(generate("path", 2), SearchBudget(part_family="ik", max_part_size=2))
        g6 = serialize_graph6(generate("path", 2))
        line = report_tsv_line(rep)
        fields = line.split("\t")
        assert fields[0] == g6
        assert fields[1] == str(rep.specs_examined)
        assert fields[2] == str(len(rep.found))
        assert fields[3] == "true"

    def test_json_found_specs_parse_back(self):
        rep = search_blowups(generate("path", 3), SearchBudget(part_family="ik", max_part_size=3))
        obj = report_to_json(rep)
        parsed = [spec_from_json(s) for s in obj["found"]]
        assert parsed == rep.found
        assert obj["exhausted"] is True
        assert obj["budget"]["part_family"] == "ik"
