"""Local maximum stable sets on a small seven-vertex graph.

Run with ``python demos/01_local_stable_sets.py``.
"""

from __future__ import annotations

from lmss import (
    enumerate_maximum_stable_sets,
    enumerate_psi,
    extend_to_maximum_stable,
    fixture,
    has_proper_lmss,
    induced_subgraph,
    neighborhood,
    stability_number,
)


def show(G, family):
    return sorted("{" + ",".join(G.vertex_names(S)) + "}" for S in family)


W = fixture("FIG1_W")
print("W has", W.n, "vertices and edges", W.edge_names(range(W.m)))

alpha, witness = stability_number(W)
print("alpha(W) =", alpha, "witnessed by", W.vertex_names(witness))
print("maximum stable sets:", show(W, enumerate_maximum_stable_sets(W)))

# A stable set S is local when it is maximum inside its closed neighbourhood.
psi = enumerate_psi(W)
print("local maximum stable sets:", show(W, psi))

# {e,g} sees only the 5-cycle c-d-e-f-g, where 2 is the best one can do.
S = W.indices("eg")
H, _ = induced_subgraph(W, neighborhood(W, S, closed=True))
print("G[N[{e,g}]] has", H.n, "vertices,", H.m, "edges, alpha", stability_number(H)[0])

# Every local set grows into a global one; the lexicographically least superset is returned.
for name in ("a", "df", "eg"):
    T = extend_to_maximum_stable(W, W.indices(name))
    print(f"extend {{{','.join(name)}}} ->", W.vertex_names(T))

# Local but not global sets are what the probe later calls "proper".
print("a proper local maximum stable set:", W.vertex_names(has_proper_lmss(W)))
