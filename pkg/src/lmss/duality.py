"""Local maximum stable sets of G versus those of its line graph L(G).

The central check: if S ∈ Ψ(G), H = G[N[S]] is König-Egerváry and M is a
maximum matching of H, then M (as a vertex set of L(G)) lies in Ψ(L(G)),
and consequently M extends to a maximum matching of G.  The functions here
test those statements instance by instance and produce re-checkable reports.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .errors import Disconnected
from .formats import to_graph6
from .graph import (
    EdgeSet,
    Graph,
    VertexSet,
    build_graph,
    induced_subgraph,
    is_connected,
    line_graph,
    neighborhood,
    to_mask,
)
from .matching import enumerate_maximum_matchings, extendable_to_maximum, matching_number
from .report import FAIL, INFO, PASS, Instance, VerificationReport
from .stability import (
    _LocalChecker,
    enumerate_psi,
    extend_to_maximum_stable,
    has_proper_lmss,
    is_local_maximum_stable,
    is_stable,
    stability_number,
)


def is_ke(G: Graph) -> bool:
    """α(G) + μ(G) == |V(G)| without building a certificate."""
    return stability_number(G)[0] + matching_number(G) == G.n


@dataclass(frozen=True)
class _LocalPiece:
    S: VertexSet
    H: Graph
    to_parent: dict
    ke: bool

    def matchings_in_parent(self, G: Graph) -> list[EdgeSet]:
        """Maximum matchings of H, as edge ids of G."""
        out = []
        for MH in enumerate_maximum_matchings(self.H):
            ids = []
            for e in MH:
                a, b = self.H.edges[e]
                ids.append(G.edge_id(self.to_parent[a], self.to_parent[b]))
            out.append(tuple(sorted(ids)))
        return sorted(out)

    def summary(self) -> dict[str, Any]:
        return {
            "vertices": sorted(self.H.names),
            "edges": self.H.m,
            "alpha": stability_number(self.H)[0],
            "mu": matching_number(self.H),
            "ke": self.ke,
        }


def _pieces(G: Graph) -> list[_LocalPiece]:
    out = []
    for S in enumerate_psi(G):
        H, remap = induced_subgraph(G, neighborhood(G, S, closed=True))
        out.append(_LocalPiece(S, H, {new: old for old, new in remap.items()}, is_ke(H)))
    return out


def verify_theorem2(G: Graph, graph_id: str | None = None) -> VerificationReport:
    """For S ∈ Ψ(G) with G[N[S]] KE, every maximum matching of G[N[S]] is in Ψ(L(G))."""
    report = VerificationReport(graph_id or to_graph6(G), "theorem2")
    L, lmap = line_graph(G)
    check = _LocalChecker(L)
    for piece in _pieces(G):
        if not piece.ke:
            continue
        for M in piece.matchings_in_parent(G):
            image = lmap.to_line(M)
            # an empty matching only arises from isolated vertices; ∅ qualifies vacuously
            ok = check.is_local(to_mask(image)) if image else True
            report.instances.append(
                Instance(
                    PASS if ok else FAIL,
                    {
                        "S": G.vertex_names(piece.S),
                        "H": piece.summary(),
                        "M": G.edge_names(M),
                        "M_in_psi_of_line_graph": ok,
                    },
                )
            )
    return report


def verify_corollary1(G: Graph, graph_id: str | None = None) -> VerificationReport:
    """Hypothesis-satisfying (S, M) pairs must extend to a maximum matching of G.

    Pairs whose G[N[S]] is not KE and that fail to extend are kept as
    informational instances.
    """
    report = VerificationReport(graph_id or to_graph6(G), "corollary1")
    mu = matching_number(G)
    for piece in _pieces(G):
        for M in piece.matchings_in_parent(G):
            M0 = extendable_to_maximum(G, M)
            if piece.ke:
                outcome = PASS if M0 is not None else FAIL
            elif M0 is None:
                outcome = INFO
            else:
                continue
            report.instances.append(
                Instance(
                    outcome,
                    {
                        "S": G.vertex_names(piece.S),
                        "H": piece.summary(),
                        "M": G.edge_names(M),
                        "M0": None if M0 is None else G.edge_names(M0),
                        "mu": mu,
                    },
                )
            )
    return report


def verify_nt_extension(G: Graph, graph_id: str | None = None) -> VerificationReport:
    """Every S ∈ Ψ(G) lies inside some maximum stable set of G."""
    report = VerificationReport(graph_id or to_graph6(G), "nt_extension")
    alpha, _ = stability_number(G)
    for S in enumerate_psi(G):
        T = extend_to_maximum_stable(G, S)
        ok = set(S) <= set(T) and len(T) == alpha and is_stable(G, T)
        report.instances.append(
            Instance(
                PASS if ok else FAIL,
                {"S": G.vertex_names(S), "superset": G.vertex_names(T), "alpha": alpha},
            )
        )
    return report


@dataclass(frozen=True)
class ConverseWitness:
    """A matching M of G lying in Ψ(L(G)), with an S that explains it if any."""

    M: EdgeSet
    witnessing_S: VertexSet | None

    def to_dict(self, G: Graph) -> dict[str, Any]:
        return {
            "M": G.edge_names(self.M),
            "witnessing_S": None if self.witnessing_S is None else G.vertex_names(self.witnessing_S),
        }


def converse_witnesses(G: Graph) -> list[ConverseWitness]:
    """Every matching of G in Ψ(L(G)), each paired with an S ∈ Ψ(G) such that
    G[N[S]] is KE and M is a maximum matching of G[N[S]].

    Among several such S the smallest is kept, ties broken lexicographically.
    """
    L, lmap = line_graph(G)
    pieces = []
    for piece in _pieces(G):
        if not piece.ke:
            continue
        edges = {G.edge_id(piece.to_parent[a], piece.to_parent[b]) for a, b in piece.H.edges}
        pieces.append((piece.S, edges, matching_number(piece.H)))
    pieces.sort(key=lambda p: (len(p[0]), p[0]))
    out = []
    for X in enumerate_psi(L):
        M = lmap.to_edges(X)
        S = next((S for S, edges, mu in pieces if set(M) <= edges and len(M) == mu), None)
        out.append(ConverseWitness(M, S))
    return out


def check_converse_witness(G: Graph, w: ConverseWitness) -> bool:
    """Re-derive a witness record from scratch."""
    L, lmap = line_graph(G)
    if not w.M or not is_local_maximum_stable(L, lmap.to_line(w.M)):
        return False
    if w.witnessing_S is None:
        return True
    S = w.witnessing_S
    if not is_local_maximum_stable(G, S):
        return False
    H, remap = induced_subgraph(G, neighborhood(G, S, closed=True))
    if not is_ke(H):
        return False
    inside = all(a in remap and b in remap for a, b in (G.edges[e] for e in w.M))
    return inside and len(w.M) == matching_number(H)


@dataclass(frozen=True)
class ProbeResult:
    """Proper local maximum stable sets in G and in L(G).

    A graph whose line graph has none while G itself has one would answer
    the open question negatively; such graphs are flagged as candidates.
    """

    g_witness: VertexSet | None
    lg_witness: EdgeSet | None

    @property
    def g_has_proper(self) -> bool:
        return self.g_witness is not None

    @property
    def lg_has_proper(self) -> bool:
        return self.lg_witness is not None

    @property
    def is_candidate(self) -> bool:
        return self.g_has_proper and not self.lg_has_proper

    def to_dict(self, G: Graph) -> dict[str, Any]:
        return {
            "G_has_proper": self.g_has_proper,
            "LG_has_proper": self.lg_has_proper,
            "G_witness": None if self.g_witness is None else G.vertex_names(self.g_witness),
            "LG_witness": None if self.lg_witness is None else G.edge_names(self.lg_witness),
            "candidate": self.is_candidate,
        }


def open_question_probe(G: Graph) -> ProbeResult:
    if not is_connected(G):
        raise Disconnected("the open question concerns connected graphs")
    L, lmap = line_graph(G)
    lw = has_proper_lmss(L)
    return ProbeResult(has_proper_lmss(G), None if lw is None else lmap.to_edges(lw))


@dataclass(frozen=True)
class Fixture:
    """A small named reference graph, with its edge labels."""

    name: str
    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    labels: dict

    @property
    def graph(self) -> Graph:
        return build_graph(self.vertices, self.edges)

    def edge(self, label: str) -> int:
        a, b = self.labels[label]
        return self.graph.edge_by_names(a, b)

    def edge_list_text(self) -> str:
        inverse = {frozenset(p): lab for lab, p in self.labels.items()}
        lines = [f"# {self.name}"]
        for a, b in self.edges:
            lab = inverse.get(frozenset((a, b)))
            lines.append(f"{a} {b}" + (f"  # {lab}" if lab else ""))
        return "\n".join(lines) + "\n"


def _fixture(name, vertices, edges, labels=None) -> Fixture:
    pairs = tuple(tuple(e.split("-")) if "-" in e else (e[0], e[1]) for e in edges)
    return Fixture(name, tuple(vertices), pairs, dict(labels or {}))


FIXTURES: dict[str, Fixture] = {
    f.name: f
    for f in [
        _fixture("FIG1_W", "abcdefg", ["ab", "bc", "cd", "de", "cg", "gf", "fe"]),
        _fixture("FIG2_G", "uvxyz", ["xz", "yz", "yv", "yu", "zv", "zu", "vu"]),
        _fixture(
            "FIG2_H",
            ["a", "b", "c", "d", "p0", "p1", "p2"],
            ["a-p0", "p0-d", "p0-p1", "p1-p2", "a-p1", "b-p0", "b-p1", "c-p2", "c-p1", "p1-d"],
            {"e1": ("c", "p2"), "e2": ("b", "p1"), "e3": ("p0", "d")},
        ),
        _fixture(
            "FIG3_G",
            "pqrvxyz",
            ["vx", "xp", "xq", "xr", "qr", "qy", "yz"],
            {
                "e1": ("v", "x"), "e2": ("x", "p"), "e3": ("x", "q"), "e4": ("q", "r"),
                "e5": ("q", "y"), "e6": ("y", "z"), "e7": ("x", "r"),
            },
        ),
        _fixture(
            "FIG4_G",
            ["t1", "t2", "t3", "u1", "u2", "u3", "u4"],
            ["u1-t1", "t1-t2", "u2-t2", "u1-u2", "u2-u3", "u3-t3", "t3-u4", "u3-u4"],
            {
                "e1": ("u1", "t1"), "e2": ("t1", "t2"), "e3": ("u2", "t2"), "e4": ("u1", "u2"),
                "e5": ("u2", "u3"), "e6": ("u3", "t3"), "e7": ("t3", "u4"), "e8": ("u3", "u4"),
            },
        ),
        _fixture(
            "FIG5_G",
            ["a1", "a2", "b1", "b2", "c1", "c2", "d1", "d2", "m1", "m2"],
            [
                "a1-a2", "b1-b2", "c1-c2", "d1-d2", "a2-m1", "m1-b2", "c2-m2", "m2-d2",
                "a1-b1", "c1-d1", "m1-m2",
            ],
            {"e0": ("m1", "m2"), "e1": ("a1", "b1"), "e2": ("c1", "d1")},
        ),
        _fixture("FIG6_G", "abcdefghi", ["ab", "bd", "cd", "ce", "df", "eh", "fh", "gh", "hi"]),
        _fixture(
            "FIG7_G",
            ["t1", "t2", "t3", "u1", "u2", "u3"],
            ["u1-u2", "u2-u3", "t1-t2", "t2-t3", "u1-t1", "u2-t2", "u3-t3"],
        ),
    ]
}


def fixture(name: str) -> Graph:
    return FIXTURES[name].graph
