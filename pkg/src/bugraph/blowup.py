"""Graph blow-ups and the exact decomposition of their betweenness.

A blow-up replaces each vertex i of a connected base graph by a part
graph H_i and joins every vertex of H_i to every vertex of H_j exactly
when ij is a base edge.  Distances between parts equal base distances,
two vertices inside one part are at distance at most two, and a
geodesic never visits a part twice.  Those facts make the betweenness
of a blown-up vertex split cleanly into

* a global share: pairs whose endpoints lie in two different parts,
* an own-part share: pairs inside the vertex's own part, and
* one share per base-neighbor part: pairs inside that part.

``decompose_betweenness`` computes the split from first principles by
classifying every pair contribution; the closed-form helpers recompute
two of the shares directly so the two routes can be compared exactly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .betweenness import betweenness_exact, format_rational, shortest_path_data
from .graphs import Graph, generate, is_connected, is_tree, parse_graph6, serialize_graph6

__all__ = [
    "BlownGraph",
    "BlowupSpec",
    "Decomposition",
    "DeltaResult",
    "DeltaUndefinedError",
    "PartDescriptor",
    "blow_up",
    "closed_form_neighbor_contribution",
    "decompose_betweenness",
    "decomposition_json",
    "delta_extremal",
    "delta_xy",
    "global_leaf_neighbor_formula",
    "neighbor_mass",
    "sigma_within",
    "spec_from_json",
    "spec_to_json",
]

PART_INDEPENDENT = "I"
PART_CLIQUE = "K"
PART_EXPLICIT = "X"


@dataclass(frozen=True)
class PartDescriptor:
    """One part of a blow-up: an independent set, a clique, or any graph."""

    kind: str
    size: int = 0
    graph: Graph | None = None

    def __post_init__(self):
        if self.kind in (PART_INDEPENDENT, PART_CLIQUE):
            if self.graph is not None:
                raise ValueError("I/K parts are given by size, not by graph")
            if self.size < 1:
                raise ValueError("part needs at least one vertex")
        elif self.kind == PART_EXPLICIT:
            if self.graph is None:
                raise ValueError("explicit part needs a graph")
            if self.graph.n < 1:
                raise ValueError("part needs at least one vertex")
            object.__setattr__(self, "size", self.graph.n)
        else:
            raise ValueError(f"unknown part kind {self.kind!r}")

    @classmethod
    def independent(cls, m: int) -> "PartDescriptor":
        return cls(PART_INDEPENDENT, m)

    @classmethod
    def clique(cls, m: int) -> "PartDescriptor":
        return cls(PART_CLIQUE, m)

    @classmethod
    def explicit(cls, g: Graph) -> "PartDescriptor":
        return cls(PART_EXPLICIT, graph=g)

    @classmethod
    def for_graph(cls, g: Graph) -> "PartDescriptor":
        """Descriptor for any graph, recognizing I/K parts by edge count."""
        if g.edge_count == 0:
            return cls.independent(g.n)
        if g.edge_count == g.n * (g.n - 1) // 2:
            return cls.clique(g.n)
        return cls.explicit(g)

    @property
    def n_vertices(self) -> int:
        return self.size

    def realize(self) -> Graph:
        if self.kind == PART_INDEPENDENT:
            return generate("empty", self.size)
        if self.kind == PART_CLIQUE:
            return generate("complete", self.size)
        assert self.graph is not None
        return self.graph

    def label(self) -> str:
        if self.kind == PART_EXPLICIT:
            return f"X({serialize_graph6(self.graph)})"
        return f"{self.kind}{self.size}"


@dataclass(frozen=True)
class BlowupSpec:
    """A base graph plus one part descriptor per base vertex."""

    base: Graph
    parts: tuple[PartDescriptor, ...]

    def __post_init__(self):
        if self.base.n < 2:
            raise ValueError("blow-up base needs at least two vertices")
        if not is_connected(self.base):
            raise ValueError("blow-up base must be connected")
        if len(self.parts) != self.base.n:
            raise ValueError(
                f"need one part per base vertex: {self.base.n} != {len(self.parts)}"
            )
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def total_vertices(self) -> int:
        return sum(p.n_vertices for p in self.parts)

    def label(self) -> str:
        inner = ",".join(p.label() for p in self.parts)
        return f"{serialize_graph6(self.base)}[{inner}]"


@dataclass(frozen=True)
class BlownGraph:
    """The blown-up graph with its part provenance.

    Vertices are numbered contiguously part by part, in base-vertex
    order: part i occupies ``part_vertices[i]``.
    """

    graph: Graph
    part_of: tuple[int, ...]
    part_vertices: tuple[tuple[int, ...], ...]

    @property
    def part_count(self) -> int:
        return len(self.part_vertices)

    def base_adjacent(self, i: int, j: int) -> bool:
        # Cross-part edges are all-or-nothing, so one probe decides.
        if i == j:
            return False
        return self.graph.has_edge(self.part_vertices[i][0], self.part_vertices[j][0])

    def base_neighbor_parts(self, i: int) -> tuple[int, ...]:
        return tuple(j for j in range(self.part_count) if self.base_adjacent(i, j))

    def part_mask(self, i: int) -> int:
        m = 0
        for v in self.part_vertices[i]:
            m |= 1 << v
        return m


def blow_up(spec: BlowupSpec) -> BlownGraph:
    """Materialize the blow-up described by ``spec``."""
    sizes = [p.n_vertices for p in spec.parts]
    starts = [0] * len(sizes)
    for i in range(1, len(sizes)):
        starts[i] = starts[i - 1] + sizes[i - 1]
    total = sum(sizes)
    edges: list[tuple[int, int]] = []
    part_of = [0] * total
    part_vertices = []
    for i, part in enumerate(spec.parts):
        lo = starts[i]
        part_vertices.append(tuple(range(lo, lo + sizes[i])))
        for v in range(lo, lo + sizes[i]):
            part_of[v] = i
        for u, w in part.realize().edges:
            edges.append((lo + u, lo + w))
    for i, j in spec.base.edges:
        for u in part_vertices[i]:
            for w in part_vertices[j]:
                edges.append((u, w))
    return BlownGraph(
        graph=Graph(total, tuple(edges)),
        part_of=tuple(part_of),
        part_vertices=tuple(part_vertices),
    )


def sigma_within(bg: BlownGraph, i: int, u: int, v: int) -> int:
    """Number of u,v-geodesics of the whole graph that stay inside part i.

    For distinct u, v in part i this is 1 when uv is an edge and
    otherwise the number of common neighbors of u and v inside the
    part: same-part non-neighbors always sit at distance two because
    the base is connected, so every neighboring part supplies common
    neighbors.
    """
    if u == v:
        raise ValueError("need two distinct vertices")
    if bg.part_of[u] != i or bg.part_of[v] != i:
        raise ValueError(f"vertices {u},{v} are not both in part {i}")
    if bg.graph.has_edge(u, v):
        return 1
    bits = bg.graph.adjacency_bits
    return (bits[u] & bits[v] & bg.part_mask(i)).bit_count()


def neighbor_mass(spec: BlowupSpec, i: int) -> int:
    """Total size of the parts sitting on base neighbors of vertex i."""
    if not (0 <= i < spec.base.n):
        raise ValueError(f"base vertex {i} out of range")
    return sum(spec.parts[j].n_vertices for j in spec.base.adjacency[i])


@dataclass(frozen=True)
class Decomposition:
    """Betweenness of one blown-up vertex, split by pair location."""

    vertex: int
    global_part: Fraction
    own_local: Fraction
    neighbor_locals: dict[int, Fraction] = field(compare=False)

    def total(self) -> Fraction:
        return self.global_part + self.own_local + sum(
            self.neighbor_locals.values(), Fraction(0)
        )


def decompose_betweenness(bg: BlownGraph, v: int) -> Decomposition:
    """Split B(v) into global / own-part / per-neighbor-part shares.

    Computed from scratch by classifying every pair contribution
    sigma_{x,y}(v) / sigma_{x,y}; no closed form is consulted.  Keys of
    ``neighbor_locals`` are exactly the base neighbors of v's part; a
    pair inside any other part can never route through v, which the
    classification loop enforces.
    """
    g = bg.graph
    n = g.n
    if not (0 <= v < n):
        raise ValueError(f"vertex {v} out of range")
    pv = bg.part_of[v]
    dist, sigma = shortest_path_data(g)
    glob = Fraction(0)
    own = Fraction(0)
    nbr: dict[int, Fraction] = {j: Fraction(0) for j in bg.base_neighbor_parts(pv)}
    dv = dist[v]
    sv = sigma[v]
    for x in range(n):
        if x == v or dv[x] == -1:
            continue
        dx = dist[x]
        sx = sigma[x]
        for y in range(x + 1, n):
            if y == v:
                continue
            d = dx[y]
            if d < 2 or dv[y] == -1 or dx[v] + dv[y] != d:
                continue
            count = sx[v] * sv[y]
            if count == 0:
                continue
            c = Fraction(count, sx[y])
            px = bg.part_of[x]
            py = bg.part_of[y]
            if px != py:
                glob += c
            elif px == pv:
                own += c
            else:
                if px not in nbr:
                    raise AssertionError(
                        f"pair inside part {px} routed through part {pv}, "
                        "which is not a base neighbor"
                    )
                nbr[px] += c
    return Decomposition(vertex=v, global_part=glob, own_local=own, neighbor_locals=nbr)


def closed_form_neighbor_contribution(
    spec: BlowupSpec, bg: BlownGraph, i: int, j: int
) -> Fraction:
    """Share of B(x) contributed by pairs inside neighbor part j.

    For any x in part i with ij a base edge, each non-adjacent pair
    u, v inside part j routes through x exactly once among its
    sigma_within(u, v) + neighbor_mass(j) geodesics, so the value

        sum over non-adjacent pairs of 1 / (sigma_within + mass)

    does not depend on which x in part i is asked about.
    """
    if not (0 <= i < spec.base.n and 0 <= j < spec.base.n):
        raise ValueError("part index out of range")
    if not spec.base.has_edge(i, j):
        raise ValueError(f"parts {i} and {j} are not adjacent in the base")
    nj = neighbor_mass(spec, j)
    total = Fraction(0)
    for u, w in combinations(bg.part_vertices[j], 2):
        if not bg.graph.has_edge(u, w):
            total += Fraction(1, sigma_within(bg, j, u, w) + nj)
    return total


def global_leaf_neighbor_formula(
    spec: BlowupSpec, bg: BlownGraph, y: int, leaf_part: int = 0
) -> Fraction:
    """Global share of B(y) for y in the part next to a leaf part.

    Requires a tree base, ``leaf_part`` of base degree one adjacent to
    y's part, and y's part of base degree at most two.  Under those
    conditions every pair routed through y's part joins the leaf part
    to the rest of the graph and spreads evenly, giving

        |H_leaf| * (N - |H_leaf| - |H_y|) / |H_y|.

    With a third branch at y's part (base degree >= 3) extra pairs
    cross between the other branches and the formula undercounts, so
    that case is rejected.
    """
    base = spec.base
    if not is_tree(base):
        raise ValueError("formula requires a tree base")
    if base.degree(leaf_part) != 1:
        raise ValueError(f"part {leaf_part} is not a leaf of the base")
    j = bg.part_of[y]
    if not base.has_edge(leaf_part, j):
        raise ValueError(f"vertex {y} is not in a part adjacent to part {leaf_part}")
    if base.degree(j) > 2:
        raise ValueError(
            "formula requires the leaf's neighbor to have base degree <= 2"
        )
    n1 = spec.parts[leaf_part].n_vertices
    n2 = spec.parts[j].n_vertices
    total = bg.graph.n
    return Fraction(n1 * (total - n1 - n2), n2)


class DeltaUndefinedError(ValueError):
    """The betweenness-ratio denominator vanished (e.g. a two-vertex base)."""


@dataclass(frozen=True)
class DeltaResult:
    value: Fraction
    x: int
    y: int


def _leaf_context(bg: BlownGraph, x: int, y: int) -> tuple[int, int]:
    px = bg.part_of[x]
    py = bg.part_of[y]
    nbrs = bg.base_neighbor_parts(px)
    if len(nbrs) != 1:
        raise ValueError(f"part {px} of x is not a leaf part of the base")
    if nbrs[0] != py:
        raise ValueError(f"y must sit in the unique base neighbor of part {px}")
    return px, py


def delta_xy(spec: BlowupSpec, x: int, y: int, *, blown: BlownGraph | None = None) -> Fraction:
    """Ratio comparing B(x) to B(y) across a leaf part boundary.

    x lives in a leaf part, y in that leaf's unique neighbor part.  The
    ratio is (B_own(x)-share y lacks) over (everything B(y) has that
    B(x) lacks); it equals 1 exactly when B(x) = B(y), and is < 1 when
    B(x) < B(y).  Raises DeltaUndefinedError when the denominator is 0,
    which happens for degenerate bases like a single edge.
    """
    bg = blown if blown is not None else blow_up(spec)
    px, py = _leaf_context(bg, x, y)
    dx = decompose_betweenness(bg, x)
    dy = decompose_betweenness(bg, y)
    numer = dx.neighbor_locals[py] - dy.own_local
    denom = dy.global_part + (dy.neighbor_locals[px] - dx.own_local)
    for j, val in dy.neighbor_locals.items():
        if j != px:
            denom += val
    if denom == 0:
        raise DeltaUndefinedError(
            f"denominator of the x/y betweenness ratio vanished (x={x}, y={y})"
        )
    return numer / denom


def delta_extremal(
    spec: BlowupSpec, *, leaf_part: int = 0, blown: BlownGraph | None = None
) -> DeltaResult:
    """delta_xy at the extremal pair: x maximizes betweenness over the
    leaf part, y minimizes it over the neighbor part (lowest index on
    ties)."""
    bg = blown if blown is not None else blow_up(spec)
    nbrs = bg.base_neighbor_parts(leaf_part)
    if len(nbrs) != 1:
        raise ValueError(f"part {leaf_part} is not a leaf part of the base")
    profile = betweenness_exact(bg.graph)
    x = max(bg.part_vertices[leaf_part], key=lambda v: (profile[v], -v))
    y = min(bg.part_vertices[nbrs[0]], key=lambda v: (profile[v], v))
    return DeltaResult(value=delta_xy(spec, x, y, blown=bg), x=x, y=y)


# ---------------------------------------------------------------------------
# serialization


def _part_to_json(p: PartDescriptor) -> dict:
    if p.kind == PART_EXPLICIT:
        return {"kind": PART_EXPLICIT, "graph6": serialize_graph6(p.graph)}
    return {"kind": p.kind, "size": p.size}


def _part_from_json(obj: dict) -> PartDescriptor:
    kind = obj.get("kind")
    if kind == PART_EXPLICIT:
        return PartDescriptor.explicit(parse_graph6(obj["graph6"]))
    if kind in (PART_INDEPENDENT, PART_CLIQUE):
        return PartDescriptor(kind, int(obj["size"]))
    raise ValueError(f"unknown part kind {kind!r}")


def spec_to_json(spec: BlowupSpec) -> dict:
    return {
        "base": serialize_graph6(spec.base),
        "parts": [_part_to_json(p) for p in spec.parts],
    }


def spec_from_json(obj: dict) -> BlowupSpec:
    if not isinstance(obj, dict) or "base" not in obj or "parts" not in obj:
        raise ValueError("blow-up spec JSON needs 'base' and 'parts'")
    base = parse_graph6(obj["base"])
    parts = tuple(_part_from_json(p) for p in obj["parts"])
    return BlowupSpec(base=base, parts=parts)


def decomposition_json(dec: Decomposition) -> dict:
    return {
        "vertex": dec.vertex,
        "global_part": format_rational(dec.global_part),
        "own_local": format_rational(dec.own_local),
        "neighbor_locals": {
            str(j): format_rational(dec.neighbor_locals[j])
            for j in sorted(dec.neighbor_locals)
        },
    }
