"""Core graph type, graph6 codec, structure predicates, enumeration."""

from __future__ import annotations

from itertools import combinations, permutations, product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from bugraph.graphs import (
    Graph,
    Graph6Error,
    bfs_distances,
    canonical_form,
    canonical_relabel,
    cut_vertices,
    diameter,
    enumerate_graphs,
    enumerate_trees,
    generate,
    is_connected,
    is_isomorphic,
    is_tree,
    is_two_connected,
    parse_adjacency_text,
    parse_graph6,
    serialize_adjacency_text,
    serialize_graph6,
)

from conftest import connected_graphs, graphs


class TestGraphType:
    def test_edges_normalized(self):
        g = Graph(4, ((3, 1), (0, 2)))
        assert g.edges == ((0, 2), (1, 3))
        assert g.edge_count == 2

    def test_rejects_duplicate_edge(self):
        with pytest.raises(ValueError):
            Graph(4, ((3, 1), (0, 2), (1, 3)))

    def test_rejects_loop(self):
        with pytest.raises(ValueError):
            Graph(3, ((1, 1),))

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, ((0, 3),))
        with pytest.raises(ValueError):
            Graph(-1, ())

    def test_adjacency_and_degree(self):
        g = Graph(4, ((0, 1), (1, 2), (1, 3)))
        assert g.adjacency[1] == (0, 2, 3)
        assert g.degree(1) == 3
        assert g.has_edge(2, 1)
        assert not g.has_edge(0, 3)

    def test_relabel_reverses(self):
        g = Graph(4, ((0, 1), (1, 2), (2, 3)))
        perm = (2, 0, 3, 1)
        h = g.relabel(perm)
        back = h.relabel(tuple(perm.index(i) for i in range(4)))
        assert back == g


# hand-decoded byte-level cases pin the codec down
G6_CASES = [
    ("A_", Graph(2, ((0, 1),))),
    ("A?", Graph(2, ())),
    ("Bw", generate("complete", 3)),
    ("BW", Graph(3, ((0, 2), (1, 2)))),
    ("C~", generate("complete", 4)),
    ("D?{", Graph(5, ((0, 4), (1, 4), (2, 4), (3, 4)))),
]


class TestGraph6:
    @pytest.mark.parametrize("text,expected", G6_CASES)
    def test_known_decodings(self, text, expected):
        assert parse_graph6(text) == expected

    @pytest.mark.parametrize("text,expected", G6_CASES)
    def test_known_encodings(self, text, expected):
        assert serialize_graph6(expected) == text

    def test_header_accepted(self):
        assert parse_graph6(">>graph6<<A_") == Graph(2, ((0, 1),))

    def test_truncated_reports_offset(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("D?")
        assert exc.value.offset is not None

    def test_trailing_bytes_rejected(self):
        with pytest.raises(Graph6Error):
            parse_graph6("A_A_")

    def test_bad_byte_rejected(self):
        with pytest.raises(Graph6Error) as exc:
            parse_graph6("A" + chr(20))
        assert exc.value.offset == 1

    def test_large_n_form(self):
        g = generate("path", 80)
        assert parse_graph6(serialize_graph6(g)) == g

    @given(graphs(min_n=1, max_n=7))
    def test_round_trip(self, g):
        assert parse_graph6(serialize_graph6(g)) == g

    def test_round_trip_empty_graph(self):
        assert parse_graph6(serialize_graph6(Graph(0))) == Graph(0)


class TestAdjacencyText:
    def test_round_trip(self):
        g = Graph(4, ((0, 1), (1, 2), (2, 3)))
        assert parse_adjacency_text(serialize_adjacency_text(g)) == g

    def test_rejects_garbage(self):
        with pytest.raises(ValueError):
            parse_adjacency_text("4\n0 zero\n")


class TestGenerate:
    def test_path(self):
        g = generate("path", 4)
        assert g.edges == ((0, 1), (1, 2), (2, 3))

    def test_cycle(self):
        g = generate("cycle", 4)
        assert g.edge_count == 4
        assert all(g.degree(v) == 2 for v in range(4))
        with pytest.raises(ValueError):
            generate("cycle", 2)

    def test_complete_and_empty(self):
        assert generate("complete", 5).edge_count == 10
        assert generate("empty", 5).edge_count == 0

    def test_star_center_is_last(self):
        g = generate("star", 3)
        assert g.n == 4
        assert g.degree(3) == 3
        assert all(g.degree(v) == 1 for v in range(3))

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            generate("torus", 3)


def _brute_diameter(g: Graph) -> int:
    return max(max(bfs_distances(g, v)) for v in range(g.n))


def _brute_cut_vertices(g: Graph) -> list[int]:
    # v is a cut vertex iff deleting it raises the component count
    def components(vertices, edges):
        vs = list(vertices)
        parent = {v: v for v in vs}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for u, w in edges:
            parent[find(u)] = find(w)
        return len({find(v) for v in vs})

    base = components(range(g.n), g.edges)
    out = []
    for v in range(g.n):
        rest = [u for u in range(g.n) if u != v]
        kept = [e for e in g.edges if v not in e]
        if rest and components(rest, kept) > base:
            out.append(v)
    return out


class TestPredicates:
    @given(connected_graphs(min_n=1, max_n=6))
    def test_diameter_matches_bfs(self, g):
        assert diameter(g) == _brute_diameter(g)

    def test_diameter_rejects_disconnected(self):
        with pytest.raises(ValueError):
            diameter(Graph(2, ()))

    @given(graphs(min_n=1, max_n=6))
    def test_cut_vertices_match_deletion(self, g):
        assert cut_vertices(g) == _brute_cut_vertices(g)

    @given(graphs(min_n=1, max_n=6))
    def test_two_connected_definition(self, g):
        expected = g.n >= 3 and is_connected(g) and not cut_vertices(g)
        assert is_two_connected(g) == expected

    def test_tree_predicate(self):
        assert is_tree(generate("path", 5))
        assert is_tree(generate("star", 4))
        assert not is_tree(generate("cycle", 4))
        assert not is_tree(Graph(2, ()))

    def test_cut_vertices_of_path(self):
        assert cut_vertices(generate("path", 5)) == [1, 2, 3]


class TestCanonical:
    @given(graphs(min_n=1, max_n=6), st.randoms())
    def test_form_is_invariant_under_relabeling(self, g, rnd):
        perm = list(range(g.n))
        rnd.shuffle(perm)
        assert canonical_form(g) == canonical_form(g.relabel(tuple(perm)))

    @given(graphs(min_n=1, max_n=6))
    def test_relabel_is_isomorphic_and_fixed(self, g):
        c = canonical_relabel(g)
        assert is_isomorphic(g, c)
        assert canonical_relabel(c) == c

    def test_distinguishes_same_degree_sequence(self):
        # C6 and two triangles share the degree sequence (all 2s)
        c6 = generate("cycle", 6)
        two_triangles = Graph(6, ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)))
        assert not is_isomorphic(c6, two_triangles)


def _brute_classes(n: int) -> list[Graph]:
    pairs = list(combinations(range(n), 2))
    reps: list[Graph] = []
    for bits in product((0, 1), repeat=len(pairs)):
        g = Graph(n, tuple(p for p, b in zip(pairs, bits) if b))
        if not any(_brute_isomorphic(g, r) for r in reps):
            reps.append(g)
    return reps


def _brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    hset = set(h.edges)
    for perm in permutations(range(g.n)):
        if all(tuple(sorted((perm[u], perm[v]))) in hset for u, v in g.edges):
            return True
    return False


def _prufer_tree(seq: tuple[int, ...]) -> Graph:
    n = len(seq) + 2
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    last = [u for u in range(n) if degree[u] == 1]
    edges.append((last[0], last[1]))
    return Graph(n, tuple(edges))


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [(0, 1), (1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)])
    def test_graph_counts(self, n, count):
        assert len(enumerate_graphs(n)) == count

    @pytest.mark.parametrize("n,count", [(1, 1), (2, 1), (3, 1), (4, 2), (5, 3), (6, 6), (7, 11), (8, 23), (9, 47), (10, 106)])
    def test_tree_counts(self, n, count):
        assert len(enumerate_trees(n)) == count

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_classes_match_brute_force(self, n):
        ours = enumerate_graphs(n)
        brute = _brute_classes(n)
        assert len(ours) == len(brute)
        for g in ours:
            assert sum(1 for r in brute if _brute_isomorphic(g, r)) == 1

    @pytest.mark.parametrize("n", [4, 5])
    def test_trees_cover_prufer_space(self, n):
        ours = enumerate_trees(n)
        assert all(is_tree(t) and t.n == n for t in ours)
        seen = set()
        for seq in product(range(n), repeat=n - 2):
            t = _prufer_tree(seq)
            assert is_tree(t)
            seen.add(canonical_form(t))
        assert seen == {canonical_form(t) for t in ours}

    def test_enumeration_is_deterministic(self):
        a = [serialize_graph6(g) for g in enumerate_graphs(5)]
        b = [serialize_graph6(g) for g in enumerate_graphs(5)]
        assert a == b

    def test_caps_enforced(self):
        with pytest.raises(ValueError):
            enumerate_graphs(8)
        with pytest.raises(ValueError):
            enumerate_trees(11)
