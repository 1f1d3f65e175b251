"""Matchings in general graphs.

Matchings are sorted tuples of edge ids (``EdgeSet``) whose edges are
pairwise vertex-disjoint.  Where a witness is returned it is the
lexicographically least one by edge-id sequence.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .errors import NotAMatching
from .graph import EdgeSet, Graph, VertexSet, check_edges


def check_matching(G: Graph, M: Iterable[int]) -> EdgeSet:
    M = check_edges(G, M)
    seen: set[int] = set()
    for e in M:
        u, v = G.edges[e]
        if u in seen or v in seen:
            raise NotAMatching(f"edges {G.edge_names(M)} do not form a matching")
        seen.update((u, v))
    return M


def saturated(G: Graph, M: Iterable[int]) -> VertexSet:
    return tuple(sorted(v for e in M for v in G.edges[e]))


def _augmenting_endpoint(
    n: int, adj: Sequence[Sequence[int]], match: list[int], root: int
) -> tuple[int, list[int]]:
    """BFS from a free ``root`` with blossom shrinking.

    Returns the free endpoint of an augmenting path (or -1) and the parent
    links needed to walk it back.
    """
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = [root]

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        for to in adj[v]:
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                blossom = [False] * n
                mark_path(v, cur, to, blossom)
                mark_path(to, cur, v, blossom)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    return to, parent
                used[match[to]] = True
                queue.append(match[to])
    return -1, parent


def blossom_mates(n: int, adj: Sequence[Sequence[int]]) -> list[int]:
    """Mate array of a maximum matching (-1 for unmatched vertices)."""
    match = [-1] * n
    for v in range(n):
        if match[v] == -1:
            for w in adj[v]:
                if match[w] == -1:
                    match[v], match[w] = w, v
                    break
    for root in range(n):
        if match[root] != -1:
            continue
        v, parent = _augmenting_endpoint(n, adj, match, root)
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v], match[pv] = pv, v
            v = ppv
    return match


def _mu_of_edges(n: int, edges: Iterable[tuple[int, int]]) -> int:
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return sum(1 for v, w in enumerate(blossom_mates(n, adj)) if w > v)


def matching_number(G: Graph) -> int:
    """μ(G)."""
    return _mu_of_edges(G.n, G.edges)


def _least_maximum_matching(G: Graph, pool: Sequence[int], blocked: int) -> EdgeSet:
    """Lexicographically least maximum matching using only edge ids in ``pool``
    and avoiding the vertex mask ``blocked``."""
    live = [e for e in pool if not (blocked >> G.edges[e][0]) & 1 and not (blocked >> G.edges[e][1]) & 1]
    need = _mu_of_edges(G.n, (G.edges[e] for e in live))
    chosen = []
    for i, e in enumerate(live):
        if need == 0:
            break
        u, v = G.edges[e]
        if (blocked >> u) & 1 or (blocked >> v) & 1:
            continue
        after = blocked | (1 << u) | (1 << v)
        rest = [
            G.edges[f]
            for f in live[i + 1 :]
            if not (after >> G.edges[f][0]) & 1 and not (after >> G.edges[f][1]) & 1
        ]
        if 1 + _mu_of_edges(G.n, rest) >= need:
            chosen.append(e)
            blocked = after
            need -= 1
    return tuple(chosen)


def maximum_matching(G: Graph) -> EdgeSet:
    """The lexicographically least maximum matching of G."""
    return _least_maximum_matching(G, range(G.m), 0)


def iter_matchings_of_size(G: Graph, k: int) -> Iterable[EdgeSet]:
    """All matchings with exactly ``k`` edges, unordered.

    Vertices are decided in index order (matched to a later vertex, matched
    earlier, or left free); at most ``n - 2k`` vertices may stay free.
    """
    slack_total = G.n - 2 * k
    if slack_total < 0:
        return
    chosen: list[int] = []

    def walk(undecided: int, slack: int):
        if len(chosen) == k:
            yield tuple(sorted(chosen))
            return
        if not undecided:
            return
        v = (undecided & -undecided).bit_length() - 1
        rest = undecided & ~(1 << v)
        partners = G.nbr[v] & rest
        while partners:
            w = (partners & -partners).bit_length() - 1
            partners &= partners - 1
            chosen.append(G.edge_id(v, w))
            yield from walk(rest & ~(1 << w), slack)
            chosen.pop()
        if slack > 0:
            yield from walk(rest, slack - 1)

    yield from walk((1 << G.n) - 1, slack_total)


def enumerate_maximum_matchings(G: Graph) -> list[EdgeSet]:
    """Every maximum matching, in lexicographic edge-id order."""
    return sorted(iter_matchings_of_size(G, matching_number(G)))


def is_maximal_matching(G: Graph, M: Iterable[int]) -> bool:
    M = check_matching(G, M)
    covered = 0
    for e in M:
        u, v = G.edges[e]
        covered |= (1 << u) | (1 << v)
    return all((covered >> u) & 1 or (covered >> v) & 1 for u, v in G.edges)


def extendable_to_maximum(G: Graph, M: Iterable[int]) -> EdgeSet | None:
    """Least maximum matching containing M, or None when M is not extendable."""
    M = check_matching(G, M)
    blocked = 0
    for e in M:
        u, v = G.edges[e]
        blocked |= (1 << u) | (1 << v)
    mset = set(M)
    rest = _least_maximum_matching(G, [e for e in range(G.m) if e not in mset], blocked)
    if len(M) + len(rest) != matching_number(G):
        return None
    return tuple(sorted(M + rest))


@dataclass(frozen=True)
class AlternatingComponent:
    """A path or cycle of the symmetric difference of two matchings.

    ``vertices`` lists the walk (a cycle does not repeat its start vertex);
    ``owners[i]`` is ``"M"`` or ``"Q"`` for ``edges[i]``.
    """

    kind: str
    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    owners: tuple[str, ...]

    @property
    def m_count(self) -> int:
        return self.owners.count("M")

    @property
    def q_count(self) -> int:
        return self.owners.count("Q")

    @property
    def majority(self) -> str | None:
        if self.m_count == self.q_count:
            return None
        return "M" if self.m_count > self.q_count else "Q"


@dataclass(frozen=True)
class AlternatingDecomposition:
    components: tuple[AlternatingComponent, ...]

    def augmenting(self) -> list[AlternatingComponent]:
        """Paths carrying more Q-edges than M-edges."""
        return [c for c in self.components if c.kind == "path" and c.majority == "Q"]


def symmetric_difference_decomposition(
    G: Graph, M: Iterable[int], Q: Iterable[int]
) -> AlternatingDecomposition:
    """Split (M − Q) ∪ (Q − M) into its alternating paths and cycles."""
    M, Q = check_matching(G, M), check_matching(G, Q)
    owner = {e: "M" for e in set(M) - set(Q)}
    owner.update({e: "Q" for e in set(Q) - set(M)})
    incident: dict[int, list[int]] = {}
    for e in sorted(owner):
        for v in G.edges[e]:
            incident.setdefault(v, []).append(e)
    used: set[int] = set()

    def walk(start: int, first: int) -> AlternatingComponent:
        vertices, edges = [start], []
        v, e = start, first
        while e is not None and e not in used:
            used.add(e)
            edges.append(e)
            a, b = G.edges[e]
            v = b if a == v else a
            nxt = [f for f in incident[v] if f not in used]
            e = nxt[0] if nxt else None
            if v != start:
                vertices.append(v)
        kind = "cycle" if v == start and len(edges) > 1 else "path"
        return AlternatingComponent(kind, tuple(vertices), tuple(edges), tuple(owner[f] for f in edges))

    comps = []
    for v in sorted(incident):
        if len(incident[v]) == 1 and incident[v][0] not in used:
            comps.append(walk(v, incident[v][0]))
    for v in sorted(incident):
        free = [f for f in incident[v] if f not in used]
        if free:
            comps.append(walk(v, free[0]))
    return AlternatingDecomposition(tuple(comps))


def find_alternating_cycle(G: Graph, M: Iterable[int]) -> tuple[int, ...] | None:
    """An M-alternating cycle inside G[saturated(M)] as a vertex sequence.

    Depth-first search over simple alternating paths that leave each M-edge
    ``a→b`` and try to close back at ``a`` through a non-matching edge.
    Simple paths (not parity-marked walks) keep the search exact on
    non-bipartite graphs.
    """
    M = check_matching(G, M)
    mate: dict[int, int] = {}
    for e in M:
        u, v = G.edges[e]
        mate[u], mate[v] = v, u
    sat = 0
    for v in mate:
        sat |= 1 << v

    def extend(a: int, path: list[int], on_path: int) -> list[int] | None:
        # path ends with an M-edge; leave its tail through a non-M edge
        tail = path[-1]
        options = G.nbr[tail] & sat & ~(1 << mate[tail])
        if (options >> a) & 1:
            return path
        options &= ~on_path
        while options:
            w = (options & -options).bit_length() - 1
            options &= options - 1
            x = mate[w]
            found = extend(a, path + [w, x], on_path | (1 << w) | (1 << x))
            if found:
                return found
        return None

    for e in M:
        a, b = G.edges[e]
        found = extend(a, [a, b], (1 << a) | (1 << b))
        if found:
            return tuple(found)
    return None


def is_uniquely_restricted(G: Graph, M: Iterable[int]) -> bool:
    """True iff M admits no alternating cycle (equivalently, M is the only
    perfect matching of the subgraph induced by its saturated vertices)."""
    return find_alternating_cycle(G, M) is None
