"""Matchings of G seen as stable sets of the line graph L(G).

Run with ``python demos/02_matchings_and_line_graphs.py``.
"""

from __future__ import annotations

from lmss import (
    FIXTURES,
    converse_witnesses,
    extendable_to_maximum,
    fixture,
    is_koenig_egervary,
    is_local_maximum_stable,
    line_graph,
    matching_number,
    stability_number,
    verify_corollary1,
    verify_theorem2,
)

G = fixture("FIG3_G")
L, lmap = line_graph(G)
print("G:", G.n, "vertices,", G.m, "edges; L(G):", L.n, "vertices,", L.m, "edges")
print("mu(G) =", matching_number(G), "= alpha(L(G)) =", stability_number(L)[0])

# Two matchings with the same size behave differently inside L(G).
f = FIXTURES["FIG3_G"]
for labels in (("e1", "e6"), ("e3", "e6")):
    M = [f.edge(x) for x in labels]
    local = is_local_maximum_stable(L, lmap.to_line(M))
    print(f"{G.edge_names(M)} local in L(G): {local}")

# Around every local S whose closed neighbourhood is König-Egerváry,
# each maximum matching of that neighbourhood is local in L(G).
report = verify_theorem2(G)
print("theorem check:", report.status, "over", len(report.instances), "instances")
for inst in report.instances[:4]:
    print("  S =", inst.data["S"], " M =", inst.data["M"], " ->", inst.outcome)

# The reverse direction can fail: this matching is local in L(G) with no S explaining it.
G4 = fixture("FIG4_G")
f4 = FIXTURES["FIG4_G"]
target = tuple(sorted(f4.edge(x) for x in ("e5", "e7")))
witnesses = converse_witnesses(G4)
unexplained = [w for w in witnesses if w.witnessing_S is None]
print(f"FIG4_G: {len(unexplained)} of {len(witnesses)} local matchings of L(G) have no witnessing S")
print("  e.g.", G4.edge_names(target), "unexplained:", any(w.M == target for w in unexplained))

# Without the König-Egerváry hypothesis, a local matching need not extend to a maximum one.
G6 = fixture("FIG6_G")
print("FIG6_G is KE:", is_koenig_egervary(G6) is not None)
M = [G6.edge_by_names(a, b) for a, b in (("a", "b"), ("c", "d"), ("f", "h"))]
print("extension of", G6.edge_names(M), "->", extendable_to_maximum(G6, M))
info = [i for i in verify_corollary1(G6).instances if i.outcome == "info"]
print(f"{len(info)} informational non-extendable cases, first:", info[0].data["S"], info[0].data["M"])
