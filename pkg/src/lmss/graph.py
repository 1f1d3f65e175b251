"""Immutable simple graphs and the basic constructions on them.

Vertices carry display names but are addressed by dense indices ``0..n-1``;
edges are addressed by ids ``0..|E|-1`` in lexicographic ``(u, v)`` order
with ``u < v``.  Vertex sets and edge sets are plain sorted tuples of ints.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Hashable, Iterable, Sequence
from dataclasses import dataclass, field

from .errors import (
    DuplicateEdge,
    DuplicateVertex,
    InvalidCutSides,
    LoopRejected,
    UnknownEdge,
    UnknownVertex,
)

VertexSet = tuple[int, ...]
EdgeSet = tuple[int, ...]


@dataclass(frozen=True)
class Graph:
    n: int
    names: tuple[str, ...]
    adj: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    # derived lookups, excluded from equality
    nbr: tuple[int, ...] = field(init=False, repr=False, compare=False)
    _edge_ids: dict = field(init=False, repr=False, compare=False)
    _name_ids: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        nbr = tuple(sum(1 << w for w in row) for row in self.adj)
        object.__setattr__(self, "nbr", nbr)
        object.__setattr__(self, "_edge_ids", {e: i for i, e in enumerate(self.edges)})
        object.__setattr__(self, "_name_ids", {s: i for i, s in enumerate(self.names)})

    def __hash__(self) -> int:
        return hash((self.n, self.names, self.edges))

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def index(self, name: Hashable) -> int:
        try:
            return self._name_ids[str(name)]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {name!r}") from None

    def indices(self, names: Iterable[Hashable]) -> VertexSet:
        return tuple(sorted({self.index(s) for s in names}))

    def edge_id(self, u: int, v: int) -> int:
        key = (u, v) if u < v else (v, u)
        try:
            return self._edge_ids[key]
        except KeyError:
            raise UnknownEdge(f"no edge between {u} and {v}") from None

    def edge_by_names(self, a: Hashable, b: Hashable) -> int:
        u, v = self.index(a), self.index(b)
        try:
            return self.edge_id(u, v)
        except UnknownEdge:
            raise UnknownEdge(f"{a}-{b} is not an edge") from None

    def has_edge(self, u: int, v: int) -> bool:
        return (self.nbr[u] >> v) & 1 == 1

    def vertex_names(self, vs: Iterable[int]) -> list[str]:
        """Names of ``vs``, sorted lexicographically."""
        return sorted(self.names[v] for v in vs)

    def edge_names(self, es: Iterable[int]) -> list[str]:
        out = []
        for e in es:
            u, v = self.edges[e]
            a, b = sorted((self.names[u], self.names[v]))
            out.append(f"{a}-{b}")
        return sorted(out)


def build_graph(
    vertex_names: Sequence[Hashable], edge_pairs: Iterable[tuple[Hashable, Hashable]]
) -> Graph:
    """Build a simple graph; indices follow the order of ``vertex_names``."""
    names = tuple(str(s) for s in vertex_names)
    ids: dict[str, int] = {}
    for i, s in enumerate(names):
        if s in ids:
            raise DuplicateVertex(f"vertex {s!r} listed twice")
        ids[s] = i
    seen: set[tuple[int, int]] = set()
    for a, b in edge_pairs:
        a, b = str(a), str(b)
        for s in (a, b):
            if s not in ids:
                raise UnknownVertex(f"edge endpoint {s!r} is not a declared vertex")
        if a == b:
            raise LoopRejected(f"self-loop at {a!r}")
        u, v = sorted((ids[a], ids[b]))
        if (u, v) in seen:
            raise DuplicateEdge(f"edge {a}-{b} listed twice")
        seen.add((u, v))
    return _from_index_edges(names, seen)


def from_edges(n: int, edges: Iterable[tuple[int, int]], names: Sequence[str] | None = None) -> Graph:
    """Build from index pairs; names default to ``"0".."n-1"``."""
    if names is None:
        names = [str(i) for i in range(n)]
    return build_graph(names, ((names[u], names[v]) for u, v in edges))


def _from_index_edges(names: tuple[str, ...], edge_set: Iterable[tuple[int, int]]) -> Graph:
    n = len(names)
    edges = tuple(sorted(edge_set))
    rows: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        rows[u].append(v)
        rows[v].append(u)
    adj = tuple(tuple(sorted(r)) for r in rows)
    return Graph(n, names, adj, edges)


def check_vertices(G: Graph, A: Iterable[int]) -> VertexSet:
    out = set()
    for v in A:
        if not isinstance(v, int) or not 0 <= v < G.n:
            raise UnknownVertex(f"vertex index {v!r} out of range for n={G.n}")
        out.add(v)
    return tuple(sorted(out))


def check_edges(G: Graph, F: Iterable[int]) -> EdgeSet:
    out = set()
    for e in F:
        if not isinstance(e, int) or not 0 <= e < G.m:
            raise UnknownEdge(f"edge id {e!r} out of range for |E|={G.m}")
        out.add(e)
    return tuple(sorted(out))


def to_mask(vs: Iterable[int]) -> int:
    mask = 0
    for v in vs:
        mask |= 1 << v
    return mask


def from_mask(mask: int) -> VertexSet:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return tuple(out)


def neighborhood(G: Graph, A: Iterable[int], closed: bool = False) -> VertexSet:
    """N(A) = vertices outside A with a neighbor in A; with ``closed``, A ∪ N(A)."""
    A = check_vertices(G, A)
    amask = to_mask(A)
    reach = 0
    for v in A:
        reach |= G.nbr[v]
    return from_mask(reach | amask if closed else reach & ~amask)


def induced_subgraph(G: Graph, X: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """G[X] with original names, plus the old→new index map."""
    X = check_vertices(G, X)
    remap = {old: new for new, old in enumerate(X)}
    edges = [(remap[u], remap[v]) for u, v in G.edges if u in remap and v in remap]
    return _from_index_edges(tuple(G.names[v] for v in X), edges), remap


def delete(G: Graph, W: Iterable[int] = (), F: Iterable[int] = ()) -> Graph:
    """G − W − F: drop the vertices W (with incident edges) and the edges F."""
    W = set(check_vertices(G, W))
    F = set(check_edges(G, F))
    keep = [v for v in range(G.n) if v not in W]
    remap = {old: new for new, old in enumerate(keep)}
    edges = [
        (remap[u], remap[v])
        for i, (u, v) in enumerate(G.edges)
        if i not in F and u in remap and v in remap
    ]
    return _from_index_edges(tuple(G.names[v] for v in keep), edges)


def cut_set(G: Graph, A: Iterable[int], B: Iterable[int]) -> EdgeSet:
    """Edge ids of (A, B): edges with one endpoint in each side."""
    A, B = check_vertices(G, A), check_vertices(G, B)
    if not A or not B:
        raise InvalidCutSides("both sides of a cut must be non-empty")
    amask, bmask = to_mask(A), to_mask(B)
    if amask & bmask:
        raise InvalidCutSides("cut sides overlap")
    out = []
    for i, (u, v) in enumerate(G.edges):
        if ((amask >> u) & 1 and (bmask >> v) & 1) or ((amask >> v) & 1 and (bmask >> u) & 1):
            out.append(i)
    return tuple(out)


@dataclass(frozen=True)
class LineMap:
    """Edge ids of G ↔ vertex indices of L(G).

    Isolated vertices of G have no incident edge and hence no image.
    """

    forward: tuple[int, ...]
    backward: tuple[int, ...]

    def to_line(self, F: Iterable[int]) -> VertexSet:
        return tuple(sorted(self.forward[e] for e in F))

    def to_edges(self, X: Iterable[int]) -> EdgeSet:
        return tuple(sorted(self.backward[x] for x in X))


def line_graph(G: Graph) -> tuple[Graph, LineMap]:
    names = []
    for u, v in G.edges:
        names.append(f"{G.names[u]}-{G.names[v]}")
    if len(set(names)) != len(names):
        names = [f"e{i}" for i in range(G.m)]
    ledges = set()
    for v in range(G.n):
        inc = [G.edge_id(v, w) for w in G.adj[v]]
        for i in range(len(inc)):
            for j in range(i + 1, len(inc)):
                a, b = inc[i], inc[j]
                ledges.add((a, b) if a < b else (b, a))
    ident = tuple(range(G.m))
    return _from_index_edges(tuple(names), ledges), LineMap(ident, ident)


def components(G: Graph) -> list[VertexSet]:
    seen = 0
    out = []
    for s in range(G.n):
        if (seen >> s) & 1:
            continue
        comp = 1 << s
        frontier = 1 << s
        while frontier:
            grow = 0
            for v in from_mask(frontier):
                grow |= G.nbr[v]
            frontier = grow & ~comp
            comp |= frontier
        seen |= comp
        out.append(from_mask(comp))
    return out


def is_connected(G: Graph) -> bool:
    return G.n > 0 and len(components(G)) == 1


def is_bipartite(G: Graph) -> tuple[VertexSet, VertexSet] | None:
    """A 2-colouring (parts) if G is bipartite, else None.

    The lowest vertex of every component goes to the first part.
    """
    color = [-1] * G.n
    for s in range(G.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in G.adj[u]:
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    queue.append(w)
                elif color[w] == color[u]:
                    return None
    left = tuple(v for v in range(G.n) if color[v] == 0)
    right = tuple(v for v in range(G.n) if color[v] == 1)
    return left, right


def relabel(G: Graph, order: Sequence[int]) -> Graph:
    """Copy of G whose vertex i is G's vertex ``order[i]``."""
    pos = {old: new for new, old in enumerate(order)}
    edges = [tuple(sorted((pos[u], pos[v]))) for u, v in G.edges]
    return _from_index_edges(tuple(G.names[v] for v in order), edges)


def complete_graph(n: int) -> Graph:
    return from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(leaves: int) -> Graph:
    return from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
