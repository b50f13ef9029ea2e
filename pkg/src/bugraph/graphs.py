"""Simple undirected graphs with dense integer vertices.

Everything downstream builds on this module: an immutable ``Graph``
type, graph6 and adjacency-list I/O, the classic generator families,
structural predicates (connectivity, diameter, 2-connectedness), exact
isomorphism testing via canonical forms, and isomorphism-free
enumeration of small graphs and trees.

Vertices are always 0..n-1.  Edges are stored as sorted ``(u, v)``
pairs with ``u < v``; parallel edges and loops are rejected outright.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

__all__ = [
    "GRAPH_ENUM_CAP",
    "TREE_ENUM_CAP",
    "Graph",
    "Graph6Error",
    "bfs_distances",
    "canonical_form",
    "canonical_relabel",
    "cut_vertices",
    "diameter",
    "enumerate_graphs",
    "enumerate_trees",
    "generate",
    "is_connected",
    "is_isomorphic",
    "is_tree",
    "is_two_connected",
    "parse_adjacency_text",
    "parse_graph6",
    "serialize_adjacency_text",
    "serialize_graph6",
]

# Hard caps for whole-isomorphism-class enumeration.  The canonical-form
# machinery below is fine a little past these sizes, but class counts grow
# fast enough that anything larger deserves specialist tooling.
GRAPH_ENUM_CAP = 7
TREE_ENUM_CAP = 10

_G6_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 text; ``offset`` is the byte position at fault."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``.

    The constructor normalizes edge tuples (sorted endpoints, sorted
    edge list) so structurally equal graphs compare and hash equal.
    """

    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        norm = []
        for e in self.edges:
            u, v = e
            if u > v:
                u, v = v, u
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            if u < 0 or v >= self.n:
                raise ValueError(f"edge {e!r} out of range for n={self.n}")
            norm.append((u, v))
        dedup = sorted(set(norm))
        if len(dedup) != len(norm):
            raise ValueError("duplicate edge in edge list")
        object.__setattr__(self, "edges", tuple(dedup))

    @classmethod
    def from_edges(cls, n: int, edges) -> "Graph":
        return cls(n, tuple((int(u), int(v)) for u, v in edges))

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(b)) for b in nbrs)

    @cached_property
    def adjacency_bits(self) -> tuple[int, ...]:
        # Row bitmasks; bit v of row u is set iff uv is an edge.
        rows = [0] * self.n
        for u, v in self.edges:
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return tuple(rows)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"vertex out of range: {(u, v)}")
        return (self.adjacency_bits[u] >> v) & 1 == 1

    def relabel(self, new_of_old) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``new_of_old[v]``."""
        if sorted(new_of_old) != list(range(self.n)):
            raise ValueError("relabeling is not a permutation")
        return Graph(self.n, tuple((new_of_old[u], new_of_old[v]) for u, v in self.edges))

    def __repr__(self):  # pragma: no cover - debugging aid
        return f"Graph(n={self.n}, edges={list(self.edges)!r})"


# ---------------------------------------------------------------------------
# traversal and structural predicates


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Distances from ``source``; unreachable vertices get -1."""
    if not (0 <= source < g.n):
        raise ValueError(f"source {source} out of range")
    dist = [-1] * g.n
    dist[source] = 0
    q = deque([source])
    adj = g.adjacency
    while q:
        v = q.popleft()
        dv = dist[v]
        for w in adj[v]:
            if dist[w] == -1:
                dist[w] = dv + 1
                q.append(w)
    return dist


def is_connected(g: Graph) -> bool:
    if g.n <= 1:
        return True
    return -1 not in bfs_distances(g, 0)


def diameter(g: Graph) -> int:
    """Largest pairwise distance.  Disconnected input is an error."""
    if g.n == 0:
        raise ValueError("diameter of the empty graph is undefined")
    best = 0
    for s in range(g.n):
        dist = bfs_distances(g, s)
        m = max(dist)
        if -1 in dist:
            raise ValueError("diameter undefined for disconnected graph")
        best = max(best, m)
    return best


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


def cut_vertices(g: Graph) -> list[int]:
    """Articulation points, via iterative DFS lowpoints."""
    n = g.n
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    is_cut = [False] * n
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        stack: list[tuple[int, int]] = [(root, 0)]
        while stack:
            v, i = stack[-1]
            if i < len(adj[v]):
                stack[-1] = (v, i + 1)
                w = adj[v][i]
                if disc[w] == -1:
                    parent[w] = v
                    if v == root:
                        root_children += 1
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, 0))
                elif w != parent[v]:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            else:
                stack.pop()
                p = parent[v]
                if p != -1:
                    if low[v] < low[p]:
                        low[p] = low[v]
                    if p != root and low[v] >= disc[p]:
                        is_cut[p] = True
        if root_children >= 2:
            is_cut[root] = True
    return [v for v in range(n) if is_cut[v]]


def is_two_connected(g: Graph) -> bool:
    """Connected, at least three vertices, and no articulation point."""
    return g.n >= 3 and is_connected(g) and not cut_vertices(g)


# ---------------------------------------------------------------------------
# generators


def generate(kind: str, n: int) -> Graph:
    """Build one of the classic families.

    kind: ``path`` | ``cycle`` | ``complete`` | ``empty`` | ``star``.
    For ``star`` the parameter is the number of leaves k; the result has
    k+1 vertices with the center last (index k).
    """
    if n < 1:
        raise ValueError(f"{kind} generator needs n >= 1")
    if kind == "path":
        return Graph(n, tuple((i, i + 1) for i in range(n - 1)))
    if kind == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        return Graph(n, tuple((i, i + 1) for i in range(n - 1)) + ((0, n - 1),))
    if kind == "complete":
        return Graph(n, tuple(combinations(range(n), 2)))
    if kind == "empty":
        return Graph(n, ())
    if kind == "star":
        return Graph(n + 1, tuple((i, n) for i in range(n)))
    raise ValueError(f"unknown generator kind {kind!r}")


# ---------------------------------------------------------------------------
# graph6 codec
#
# Standard layout: optional ">>graph6<<" header, then N(n), then the upper
# triangle of the adjacency matrix in column order (x01, x02, x12, x03, ...)
# packed into 6-bit groups, each stored as byte value group+63.


def _g6_decode_n(data: bytes, base: int) -> tuple[int, int]:
    """Return (n, bytes consumed).  ``base`` is the absolute offset of data[0]."""
    if not data:
        raise Graph6Error("empty graph6 string", base)
    b0 = data[0]
    if b0 < 63 or b0 > 126:
        raise Graph6Error(f"byte {b0} outside graph6 range", base)
    if b0 != 126:
        return b0 - 63, 1
    if len(data) >= 2 and data[1] == 126:
        need, start = 8, 2
    else:
        need, start = 4, 1
    if len(data) < need:
        raise Graph6Error("truncated vertex-count field", base + len(data))
    n = 0
    for k in range(start, need):
        b = data[k]
        if b < 63 or b > 126:
            raise Graph6Error(f"byte {b} outside graph6 range", base + k)
        n = (n << 6) | (b - 63)
    return n, need


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 line.  Errors carry the offending byte offset."""
    s = text.rstrip("\r\n \t")
    base = 0
    if s.startswith(_G6_HEADER):
        base = len(_G6_HEADER)
        s = s[base:]
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as e:
        raise Graph6Error("non-ascii byte", base + e.start) from None
    n, consumed = _g6_decode_n(data, base)
    body = data[consumed:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise Graph6Error("truncated edge data", base + len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing data after edge bits", base + consumed + nbytes)
    edges = []
    k = 0  # next bit index in x01, x02, x12, x03, ... order
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    for bi, b in enumerate(body):
        if b < 63 or b > 126:
            raise Graph6Error(f"byte {b} outside graph6 range", base + consumed + bi)
        group = b - 63
        for shift in range(5, -1, -1):
            if k >= nbits:
                break
            if (group >> shift) & 1:
                edges.append(pairs[k])
            k += 1
    return Graph(n, tuple(edges))


def serialize_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        head = [n + 63]
    elif n <= 258047:
        head = [126, (n >> 12) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63]
    elif n <= 68719476735:
        head = [126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)]
    else:
        raise ValueError("graph too large for graph6")
    bits = g.adjacency_bits
    out = head[:]
    group = 0
    filled = 0
    for j in range(1, n):
        row = bits[j]
        for i in range(j):
            group = (group << 1) | ((row >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(group + 63)
                group = 0
                filled = 0
    if filled:
        out.append((group << (6 - filled)) + 63)
    return bytes(out).decode("ascii")


# ---------------------------------------------------------------------------
# adjacency-list text format: vertex count on line 1, one "u v" pair per line


def parse_adjacency_text(text: str) -> Graph:
    lines = [line.strip() for line in text.splitlines()]
    lines = [line for line in lines if line]
    if not lines:
        raise ValueError("empty adjacency-list text")
    try:
        n = int(lines[0])
    except ValueError:
        raise ValueError(f"first line must be the vertex count, got {lines[0]!r}") from None
    edges = []
    for line in lines[1:]:
        fields = line.split()
        if len(fields) != 2:
            raise ValueError(f"expected 'u v', got {line!r}")
        edges.append((int(fields[0]), int(fields[1])))
    return Graph(n, tuple(edges))


def serialize_adjacency_text(g: Graph) -> str:
    lines = [str(g.n)]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# canonical forms and isomorphism
#
# Canonical form = lexicographically smallest adjacency bit string over all
# vertex orders that respect the refined color classes.  Color refinement is
# the usual iterated (color, sorted neighbor colors) splitting; the search
# additionally skips candidates that are twins of an already-tried candidate
# (equal open or closed neighborhoods), since swapping twins is an
# automorphism.  That keeps highly symmetric graphs (stars, cliques,
# independent sets, blow-up parts) from exploding the branch count.


def _color_classes(g: Graph) -> list[int]:
    n = g.n
    if n == 0:
        return []
    adj = g.adjacency
    colors = [len(adj[v]) for v in range(n)]
    nclasses = len(set(colors))
    while True:
        keys = [(colors[v], tuple(sorted(colors[u] for u in adj[v]))) for v in range(n)]
        uniq = sorted(set(keys))
        rank = {key: i for i, key in enumerate(uniq)}
        colors = [rank[keys[v]] for v in range(n)]
        if len(uniq) == nclasses:
            return colors
        nclasses = len(uniq)


def _canonical_search(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return (perm, form): perm[slot] = original vertex, form = bit groups.

    ``form[k]`` packs the adjacency of slot k against slots 0..k-1, most
    significant bit first, so comparing tuples compares bit strings.
    """
    n = g.n
    if n == 0:
        return (), ()
    bits = g.adjacency_bits
    colors = _color_classes(g)
    members: dict[int, list[int]] = {}
    for v in range(n):
        members.setdefault(colors[v], []).append(v)
    slot_color: list[int] = []
    for c in sorted(members):
        slot_color.extend([c] * len(members[c]))

    # twin classes: equal open masks, or equal closed masks
    open_ids: dict[int, int] = {}
    closed_ids: dict[int, int] = {}
    f_of = [0] * n
    t_of = [0] * n
    for v in range(n):
        m = bits[v]
        f_of[v] = open_ids.setdefault(m, len(open_ids))
        cm = m | (1 << v)
        t_of[v] = closed_ids.setdefault(cm, len(closed_ids))

    best: list[int | None] = [None] * n
    best_perm: list[tuple[int, ...]] = [()]
    used = bytearray(n)
    assigned: list[int] = []

    def rec(k: int) -> None:
        if k == n:
            best_perm[0] = tuple(assigned)
            return
        tried_f: set[int] = set()
        tried_t: set[int] = set()
        for v in members[slot_color[k]]:
            if used[v]:
                continue
            if f_of[v] in tried_f or t_of[v] in tried_t:
                continue
            tried_f.add(f_of[v])
            tried_t.add(t_of[v])
            bv = bits[v]
            w = 0
            for a in assigned:
                w = (w << 1) | ((bv >> a) & 1)
            bk = best[k]
            if bk is not None and w > bk:
                continue
            if bk is None or w < bk:
                best[k] = w
                for t in range(k + 1, n):
                    best[t] = None
            used[v] = 1
            assigned.append(v)
            rec(k + 1)
            assigned.pop()
            used[v] = 0

    rec(0)
    return best_perm[0], tuple(best)  # type: ignore[arg-type]


def canonical_form(g: Graph) -> tuple[int, ...]:
    """Label-invariant encoding: equal forms iff isomorphic graphs."""
    _, form = _canonical_search(g)
    return (g.n,) + form


def canonical_relabel(g: Graph) -> Graph:
    """The canonically labeled representative of g's isomorphism class."""
    perm, _ = _canonical_search(g)
    new_of_old = [0] * g.n
    for slot, old in enumerate(perm):
        new_of_old[old] = slot
    return g.relabel(new_of_old)


def is_isomorphic(g: Graph, h: Graph) -> bool:
    """Exact isomorphism test; intended for the small graphs used here."""
    if g.n != h.n or g.edge_count != h.edge_count:
        return False
    if sorted(g.degree(v) for v in range(g.n)) != sorted(h.degree(v) for v in range(h.n)):
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------
# enumeration up to isomorphism
#
# Every graph on n vertices arises from some graph on n-1 vertices by adding
# one vertex with an arbitrary neighborhood, and every tree arises by
# attaching one leaf.  Extending every class by every neighborhood (resp.
# every attachment point) and deduplicating canonical relabelings therefore
# covers all classes.  Slow compared to specialist generators, but exact and
# comfortably fast below the caps.


def _direct_groups(g: Graph) -> tuple[int, ...]:
    # Bit groups of the graph as labeled; on canonical relabelings this
    # equals the canonical form minus the leading vertex count.
    bits = g.adjacency_bits
    out = []
    for k in range(1, g.n):
        row = bits[k]
        w = 0
        for i in range(k):
            w = (w << 1) | ((row >> i) & 1)
        out.append(w)
    return tuple(out)


@lru_cache(maxsize=None)
def _graph_classes(n: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    if n == 1:
        return (Graph(1),)
    seen: dict[Graph, None] = {}
    for g in _graph_classes(n - 1):
        base_edges = g.edges
        for mask in range(1 << (n - 1)):
            extra = tuple((i, n - 1) for i in range(n - 1) if (mask >> i) & 1)
            h = canonical_relabel(Graph(n, base_edges + extra))
            seen[h] = None
    return tuple(sorted(seen, key=_direct_groups))


@lru_cache(maxsize=None)
def _tree_classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1),)
    seen: dict[Graph, None] = {}
    for t in _tree_classes(n - 1):
        for v in range(t.n):
            h = canonical_relabel(Graph(n, t.edges + ((v, n - 1),)))
            seen[h] = None
    return tuple(sorted(seen, key=_direct_groups))


def enumerate_graphs(n: int) -> list[Graph]:
    """All isomorphism classes of simple graphs on n vertices.

    Deterministic canonical-form order.  Capped at GRAPH_ENUM_CAP.
    """
    if not (0 <= n <= GRAPH_ENUM_CAP):
        raise ValueError(f"graph enumeration supports 0 <= n <= {GRAPH_ENUM_CAP}, got {n}")
    return list(_graph_classes(n))


def enumerate_trees(n: int) -> list[Graph]:
    """All isomorphism classes of trees on n vertices (cap TREE_ENUM_CAP)."""
    if not (1 <= n <= TREE_ENUM_CAP):
        raise ValueError(f"tree enumeration supports 1 <= n <= {TREE_ENUM_CAP}, got {n}")
    return list(_tree_classes(n))
