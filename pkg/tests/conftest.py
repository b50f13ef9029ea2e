"""Shared fixtures and hypothesis strategies."""

from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import strategies as st

from bugraph.graphs import Graph, is_connected


@pytest.fixture
def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return Graph(10, tuple(outer + inner + spokes))


@st.composite
def graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, tuple(p for p, keep in zip(pairs, picks) if keep))


@st.composite
def connected_graphs(draw, min_n: int = 1, max_n: int = 7) -> Graph:
    # grow a random spanning tree, then sprinkle extra edges
    n = draw(st.integers(min_n, max_n))
    edges = set()
    for v in range(1, n):
        u = draw(st.integers(0, v - 1))
        edges.add((u, v))
    pairs = list(combinations(range(n), 2))
    picks = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    edges.update(p for p, keep in zip(pairs, picks) if keep)
    g = Graph(n, tuple(sorted(edges)))
    assert is_connected(g)
    return g
