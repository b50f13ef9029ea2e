"""Exact betweenness centrality.

The betweenness of x is the sum over unordered vertex pairs {u, v} not
containing x of the fraction of shortest u,v-paths passing through x.
All arithmetic is ``fractions.Fraction``; nothing here ever touches a
float, so "uniform" below means literal equality of rationals.

Two algorithms are provided on purpose:

* ``betweenness_exact`` - one BFS per source with dependency
  accumulation over rational partial sums.
* ``betweenness_oracle`` - per-pair path counting: sigma_{u,v}(x) =
  sigma(u,x) * sigma(x,v) whenever x sits on a u,v-geodesic.

They share no shortest-path code, so agreement between them is a real
check rather than a tautology.  Disconnected input is fine; pairs in
different components contribute nothing.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import NamedTuple

from .graphs import Graph

__all__ = [
    "UniformityResult",
    "betweenness_exact",
    "betweenness_oracle",
    "format_rational",
    "is_betweenness_uniform",
    "parse_rational",
    "profile_json",
    "profile_uniformity",
    "shortest_path_data",
]


def betweenness_exact(g: Graph) -> list[Fraction]:
    """Betweenness of every vertex, by dependency accumulation.

    Each source contributes delta_s(v) = sum over successors w of
    (sigma_sv / sigma_sw) * (1 + delta_s(w)); summing over sources
    counts every unordered pair twice, hence the final halving.
    """
    n = g.n
    adj = g.adjacency
    acc = [Fraction(0)] * n
    for s in range(n):
        dist = [-1] * n
        sigma = [0] * n
        preds: list[list[int]] = [[] for _ in range(n)]
        dist[s] = 0
        sigma[s] = 1
        order: list[int] = []
        q = deque([s])
        while q:
            v = q.popleft()
            order.append(v)
            dv1 = dist[v] + 1
            sv = sigma[v]
            for w in adj[v]:
                if dist[w] == -1:
                    dist[w] = dv1
                    q.append(w)
                if dist[w] == dv1:
                    sigma[w] += sv
                    preds[w].append(v)
        delta = [Fraction(0)] * n
        for w in reversed(order):
            coeff = (1 + delta[w]) / sigma[w]
            for v in preds[w]:
                delta[v] += sigma[v] * coeff
            if w != s:
                acc[w] += delta[w]
    return [a / 2 for a in acc]


def _counting_bfs(adj, n: int, s: int) -> tuple[list[int], list[int]]:
    # Level-by-level BFS with geodesic counting; private to the oracle side.
    dist = [-1] * n
    sigma = [0] * n
    dist[s] = 0
    sigma[s] = 1
    frontier = [s]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            sv = sigma[v]
            for w in adj[v]:
                if dist[w] == -1:
                    dist[w] = d
                    nxt.append(w)
                if dist[w] == d:
                    sigma[w] += sv
        frontier = nxt
    return dist, sigma


def shortest_path_data(g: Graph) -> tuple[list[list[int]], list[list[int]]]:
    """All-pairs (distance, geodesic count) matrices; -1 marks unreachable."""
    adj = g.adjacency
    n = g.n
    dist: list[list[int]] = []
    sigma: list[list[int]] = []
    for s in range(n):
        d, sg = _counting_bfs(adj, n, s)
        dist.append(d)
        sigma.append(sg)
    return dist, sigma


def betweenness_oracle(g: Graph) -> list[Fraction]:
    """Betweenness by direct per-pair counting (the cross-check route)."""
    n = g.n
    dist, sigma = shortest_path_data(g)
    vals = [Fraction(0)] * n
    for u in range(n):
        du = dist[u]
        su = sigma[u]
        for v in range(u + 1, n):
            d = du[v]
            if d < 2:  # adjacent (1) or unreachable (-1): no interior vertex
                continue
            dv = dist[v]
            sv = sigma[v]
            denom = su[v]
            for x in range(n):
                if x == u or x == v:
                    continue
                if du[x] != -1 and dv[x] != -1 and du[x] + dv[x] == d:
                    vals[x] += Fraction(su[x] * sv[x], denom)
    return vals


class UniformityResult(NamedTuple):
    uniform: bool
    common: Fraction | None


def profile_uniformity(values) -> UniformityResult:
    """Whether all profile entries are exactly equal (empty: trivially so)."""
    vals = list(values)
    if not vals:
        return UniformityResult(True, None)
    first = vals[0]
    if all(v == first for v in vals[1:]):
        return UniformityResult(True, first)
    return UniformityResult(False, None)


def is_betweenness_uniform(g: Graph) -> UniformityResult:
    return profile_uniformity(betweenness_exact(g))


# ---------------------------------------------------------------------------
# rendering


def format_rational(x: Fraction) -> str:
    """Lowest-terms decimal-free rendering: "p/q", or "p" for integers."""
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s.strip())


def profile_json(values) -> dict:
    """JSON-ready profile: n, values, and the uniformity verdict."""
    vals = list(values)
    u = profile_uniformity(vals)
    return {
        "n": len(vals),
        "values": [format_rational(v) for v in vals],
        "uniform": u.uniform,
        "common": format_rational(u.common) if u.uniform and u.common is not None else None,
    }
