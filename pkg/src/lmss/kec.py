"""König-Egerváry graphs: α(G) + μ(G) = |V(G)|.

A stable set S and a matching M with |S| + |M| = |V(G)| certify the
property on their own, since |S| + |M| <= α(G) + μ(G) <= |V(G)| for every
graph.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formats import to_graph6
from .graph import EdgeSet, Graph, VertexSet, cut_set
from .matching import check_matching, enumerate_maximum_matchings, maximum_matching
from .report import FAIL, INFO, PASS, Instance, VerificationReport
from .stability import (
    enumerate_maximum_stable_sets,
    is_stable,
    least_maximum_stable_set,
    stability_number,
)


@dataclass(frozen=True)
class KECertificate:
    S: VertexSet
    M: EdgeSet
    n: int

    def verify(self, G: Graph) -> bool:
        """Re-check the certificate against G from scratch."""
        check_matching(G, self.M)
        return is_stable(G, self.S) and len(self.S) + len(self.M) == G.n == self.n


def is_koenig_egervary(G: Graph) -> KECertificate | None:
    M = maximum_matching(G)
    alpha, _ = stability_number(G)
    if alpha + len(M) != G.n:
        return None
    cert = KECertificate(least_maximum_stable_set(G), M, G.n)
    if not cert.verify(G):
        raise AssertionError("König-Egerváry certificate failed self-check")
    return cert


def verify_matching_cut_lemma(G: Graph, graph_id: str | None = None) -> VerificationReport:
    """Every maximum matching lies in (S, V−S) with |M| = |V−S|, for all S ∈ Ω(G).

    On a non-KE graph the report is not applicable; it then lists, as
    illustrations, the pairs (S, M) whose M leaves the cut.
    """
    ke = is_koenig_egervary(G) is not None
    report = VerificationReport(graph_id or to_graph6(G), "lemma_match", applicable=ke)
    matchings = enumerate_maximum_matchings(G)
    for S in enumerate_maximum_stable_sets(G):
        rest = tuple(v for v in range(G.n) if v not in S)
        cut = set(cut_set(G, S, rest)) if S and rest else set()
        for M in matchings:
            inside = set(M) <= cut
            if ke:
                outcome = PASS if inside and len(M) == len(rest) else FAIL
            elif not inside:
                outcome = INFO
            else:
                continue
            report.instances.append(
                Instance(
                    outcome,
                    {
                        "S": G.vertex_names(S),
                        "M": G.edge_names(M),
                        "M_in_cut": inside,
                        "M_size": len(M),
                        "complement_size": len(rest),
                    },
                )
            )
    return report
