"""Small connected graphs up to isomorphism, and scans over them.

Every connected graph on n vertices has a vertex whose removal leaves a
connected graph (a leaf of a spanning tree), so the classes on n vertices
are obtained by attaching one new vertex, in every non-empty way, to each
class on n - 1 vertices and deduplicating by canonical certificate.
"""

from __future__ import annotations

import json
import logging
from collections import Counter
from collections.abc import Iterable, Iterator
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any

from .canonical import canonical_certificate, canonical_order
from .errors import GraphError, TooLarge
from .formats import iter_graph6, to_graph6
from .graph import Graph, from_edges, is_connected, line_graph, relabel
from .duality import open_question_probe, verify_corollary1, verify_nt_extension, verify_theorem2
from .kec import verify_matching_cut_lemma
from .stability import enumerate_psi, stability_number

log = logging.getLogger(__name__)

MAX_BUILTIN_N = 8
CHECKS = ("theorem2", "corollary1", "lemma_match", "nt_extension", "open_question")
THEOREM_CHECKS = frozenset({"theorem2", "corollary1", "lemma_match", "nt_extension"})


def canonical_form(G: Graph) -> Graph:
    """G relabelled by its canonical order, vertices renamed ``"0".."n-1"``."""
    H = relabel(G, canonical_order(G))
    return from_edges(H.n, H.edges)


@lru_cache(maxsize=None)
def _classes(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (from_edges(1, []),)
    found: dict[bytes, Graph] = {}
    for G in _classes(n - 1):
        for subset in range(1, 1 << (n - 1)):
            edges = list(G.edges) + [(v, n - 1) for v in range(n - 1) if (subset >> v) & 1]
            H = from_edges(n, edges)
            cert = canonical_certificate(H)
            if cert not in found:
                found[cert] = canonical_form(H)
    return tuple(found[c] for c in sorted(found, key=lambda c: (found[c].m, c)))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """One canonical representative per isomorphism class of connected
    graphs on ``n`` vertices, ordered by edge count then certificate."""
    if not 1 <= n <= MAX_BUILTIN_N:
        raise TooLarge(f"builtin generation supports 1 <= n <= {MAX_BUILTIN_N}, got {n}")
    if n == MAX_BUILTIN_N:
        log.warning("generating all connected graphs on %d vertices; this is slow", n)
    yield from _classes(n)


@dataclass(frozen=True)
class ScanConfig:
    checks: tuple[str, ...]
    max_n: int | None = None
    graph6: tuple[str, ...] | None = None  # records to scan instead of the builtin atlas
    jobs: int = 1

    def __post_init__(self) -> None:
        if not self.checks:
            raise GraphError("at least one check is required")
        unknown = set(self.checks) - set(CHECKS)
        if unknown:
            raise GraphError(f"unknown checks: {sorted(unknown)}")
        if self.graph6 is None:
            if self.max_n is None or not 1 <= self.max_n <= MAX_BUILTIN_N:
                raise TooLarge(f"max_n must be in 1..{MAX_BUILTIN_N}")


class CounterexampleFound(Exception):
    """A theorem-backed check failed; ``record`` holds the serialised graph and report."""

    def __init__(self, record: dict[str, Any]):
        super().__init__(f"{record['check']} violated on {record['graph6']}")
        self.record = record


_RUNNERS = {
    "theorem2": verify_theorem2,
    "corollary1": verify_corollary1,
    "lemma_match": verify_matching_cut_lemma,
    "nt_extension": verify_nt_extension,
}


def _candidate_record(G: Graph, gid: str, probe) -> dict[str, Any]:
    # enough data to re-check the witness by hand
    L, _ = line_graph(G)
    alpha_l = stability_number(L)[0]
    return {
        "graph6": gid,
        "edges": [[G.names[u], G.names[v]] for u, v in G.edges],
        "probe": probe.to_dict(G),
        "alpha_G": stability_number(G)[0],
        "alpha_LG": alpha_l,
        "LG_psi_sizes": sorted({len(X) for X in enumerate_psi(L)}),
    }


def check_graph(task: tuple[str, tuple[str, ...]]) -> dict[str, Any]:
    """Run the selected checks on one graph6 record (worker entry point)."""
    gid, checks = task
    G = next(iter_graph6([gid]))[1]
    out: dict[str, Any] = {"graph6": gid, "n": G.n, "results": {}}
    for check in checks:
        if check == "open_question":
            if not is_connected(G):
                out["results"][check] = {"status": "not_applicable"}
                continue
            probe = open_question_probe(G)
            entry = {"status": "pass", "class": [probe.g_has_proper, probe.lg_has_proper]}
            if probe.is_candidate:
                entry["candidate"] = _candidate_record(G, gid, probe)
            out["results"][check] = entry
        else:
            report = _RUNNERS[check](G, gid)
            entry = {"status": report.status, "instances": len(report.instances)}
            if report.violations:
                entry["report"] = report.to_dict()
            out["results"][check] = entry
    return out


def _graph_stream(config: ScanConfig) -> Iterator[str]:
    if config.graph6 is not None:
        for _, G in iter_graph6(config.graph6):
            yield to_graph6(G)
    else:
        for n in range(1, config.max_n + 1):
            for G in enumerate_connected_graphs(n):
                yield to_graph6(G)


@dataclass
class ScanSummary:
    checks: tuple[str, ...]
    graphs_processed: int = 0
    by_n: Counter = field(default_factory=Counter)
    counts: dict[str, Counter] = field(default_factory=dict)
    instances: Counter = field(default_factory=Counter)
    violations: list[dict[str, Any]] = field(default_factory=list)
    classification: Counter = field(default_factory=Counter)
    candidates: list[dict[str, Any]] = field(default_factory=list)

    def add(self, result: dict[str, Any]) -> None:
        self.graphs_processed += 1
        self.by_n[result["n"]] += 1
        for check, entry in result["results"].items():
            self.counts.setdefault(check, Counter())[entry["status"]] += 1
            self.instances[check] += entry.get("instances", 0)
            if "class" in entry:
                g, lg = entry["class"]
                self.classification[f"G_proper={str(g).lower()},LG_proper={str(lg).lower()}"] += 1
            if "candidate" in entry:
                self.candidates.append(entry["candidate"])
            if "report" in entry:
                self.violations.append(
                    {"check": check, "graph6": result["graph6"], "n": result["n"], "report": entry["report"]}
                )

    def to_dict(self) -> dict[str, Any]:
        checks = {}
        for check in self.checks:
            c = self.counts.get(check, Counter())
            checks[check] = {
                "pass": c["pass"],
                "fail": c["fail"],
                "not_applicable": c["not_applicable"],
                "instances": self.instances[check],
            }
        out: dict[str, Any] = {
            "graphs_processed": self.graphs_processed,
            "graphs_by_n": {str(n): self.by_n[n] for n in sorted(self.by_n)},
            "checks": checks,
            "violations": self.violations,
        }
        if "open_question" in self.checks:
            out["open_question"] = {
                "classification": dict(sorted(self.classification.items())),
                "candidates": self.candidates,
            }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)


def scan(config: ScanConfig) -> ScanSummary:
    """Run ``config.checks`` over every graph of the source.

    Results are merged in input order, so the summary does not depend on
    ``config.jobs``.  A failing theorem-backed check raises
    :class:`CounterexampleFound`; since graphs arrive by increasing order the
    first one reported is of minimum order.
    """
    summary = ScanSummary(tuple(config.checks))
    tasks = ((gid, tuple(config.checks)) for gid in _graph_stream(config))

    def consume(results: Iterable[dict[str, Any]]) -> None:
        for result in results:
            summary.add(result)
            for check, entry in result["results"].items():
                if check in THEOREM_CHECKS and entry["status"] == "fail":
                    raise CounterexampleFound(
                        {"check": check, "graph6": result["graph6"], "report": entry["report"]}
                    )

    if config.jobs <= 1:
        consume(map(check_graph, tasks))
    else:
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            consume(pool.map(check_graph, list(tasks), chunksize=16))
    return summary
