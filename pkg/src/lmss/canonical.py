"""Isomorphism certificates for small graphs.

Colour refinement splits vertices into ordered cells; the first non-singleton
cell is then individualised one vertex at a time and refined again, until
every cell is a singleton.  Each leaf of that search is a vertex ordering and
the certificate is the largest adjacency bitstring over all leaves.  No
automorphism pruning is done apart from skipping twins, so the search is
exhaustive and the result depends only on the isomorphism class.
"""

from __future__ import annotations

from .errors import TooLarge
from .graph import Graph

MAX_EXHAUSTIVE_N = 10


def _refine(G: Graph, colors: list[int]) -> list[int]:
    """Equitable refinement of an ordered colouring (colours are ranks)."""
    n = G.n
    k = len(set(colors))
    while True:
        sigs = []
        for v in range(n):
            counts = [0] * k
            for w in G.adj[v]:
                counts[colors[w]] += 1
            sigs.append((colors[v], tuple(counts)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == k:
            return new
        colors, k = new, len(rank)


def _twin_representatives(G: Graph, cell: list[int]) -> list[int]:
    # u, v are twins when N(u) - {v} == N(v) - {u}; swapping them is an
    # automorphism that fixes every cell, so one branch per class suffices.
    parent = {v: v for v in cell}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, u in enumerate(cell):
        for v in cell[i + 1 :]:
            if G.nbr[u] & ~(1 << v) == G.nbr[v] & ~(1 << u):
                parent[find(v)] = find(u)
    return sorted({find(v) for v in cell})


def _encode(G: Graph, order: list[int]) -> int:
    pos = [0] * G.n
    for i, v in enumerate(order):
        pos[v] = i
    code = 0
    n = G.n
    for u, v in G.edges:
        a, b = pos[u], pos[v]
        if a > b:
            a, b = b, a
        # row-major upper triangle, earliest pair is the most significant bit
        idx = a * n - a * (a + 1) // 2 + (b - a - 1)
        code |= 1 << (n * (n - 1) // 2 - 1 - idx)
    return code


def canonical_order(G: Graph) -> list[int]:
    """A vertex ordering attaining the certificate (``order[i]`` is old index)."""
    if G.n == 0:
        return []
    best_code = -1
    best_order: list[int] = []

    def search(colors: list[int]) -> None:
        nonlocal best_code, best_order
        k = len(set(colors))
        if k == G.n:
            order = sorted(range(G.n), key=colors.__getitem__)
            code = _encode(G, order)
            if code > best_code:
                best_code, best_order = code, order
            return
        sizes = [0] * k
        for c in colors:
            sizes[c] += 1
        target = next(c for c in range(k) if sizes[c] > 1)
        cell = [v for v in range(G.n) if colors[v] == target]
        for v in _twin_representatives(G, cell):
            # v keeps the cell's rank, the rest of the cell moves just behind it
            split = [2 * c + (c == target and u != v) for u, c in enumerate(colors)]
            ranks = {c: i for i, c in enumerate(sorted(set(split)))}
            search(_refine(G, [ranks[c] for c in split]))

    degree_ranks = {d: i for i, d in enumerate(sorted({G.degree(v) for v in range(G.n)}))}
    search(_refine(G, [degree_ranks[G.degree(v)] for v in range(G.n)]))
    return best_order


def canonical_certificate(G: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    if G.n > MAX_EXHAUSTIVE_N:
        colors = _refine(G, [0] * G.n)
        if len(set(colors)) != G.n:
            raise TooLarge(
                f"n={G.n} exceeds {MAX_EXHAUSTIVE_N} and refinement does not separate all vertices"
            )
    order = canonical_order(G)
    nbits = G.n * (G.n - 1) // 2
    code = _encode(G, order) if G.n else 0
    return G.n.to_bytes(2, "big") + code.to_bytes((nbits + 7) // 8, "big")
