"""Command-line interface.

Every command prints one JSON report (``schema_version`` 1) unless
``--human`` is given.  Exit codes: 0 success, 1 check violation,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any

from . import __version__
from .atlas import CHECKS, CounterexampleFound, ScanConfig, scan
from .duality import verify_corollary1, verify_nt_extension, verify_theorem2
from .errors import GraphError, UnknownEdge
from .formats import format_edgelist, read_graph, to_graph6
from .graph import Graph, is_bipartite, line_graph
from .kec import is_koenig_egervary, verify_matching_cut_lemma
from .matching import check_matching, extendable_to_maximum, matching_number, maximum_matching
from .stability import enumerate_maximum_stable_sets, enumerate_psi, has_proper_lmss, stability_number

SCHEMA_VERSION = 1

VERIFY_CHECKS = {
    "theorem2": ("theorem2", verify_theorem2),
    "corollary1": ("corollary1", verify_corollary1),
    "lemma-match": ("lemma_match", verify_matching_cut_lemma),
    "nt": ("nt_extension", verify_nt_extension),
}


def parse_matching_spec(G: Graph, spec: str) -> tuple[int, ...]:
    """Edge ids for ``"u-v,w-x"``; a name may itself contain ``-``."""
    ids = []
    for item in filter(None, (s.strip() for s in spec.split(","))):
        parts = item.split("-")
        found = None
        for cut in range(1, len(parts)):
            a, b = "-".join(parts[:cut]), "-".join(parts[cut:])
            try:
                found = G.edge_by_names(a, b)
                break
            except GraphError:
                continue
        if found is None:
            raise UnknownEdge(f"{item!r} is not an edge of the graph")
        ids.append(found)
    return check_matching(G, ids)


def _envelope(command: str, inp: dict[str, Any], results: Any) -> dict[str, Any]:
    return {"schema_version": SCHEMA_VERSION, "command": command, "input": inp, "results": results}


def cmd_analyze(G: Graph, max_size: int | None = None) -> dict[str, Any]:
    alpha, _ = stability_number(G)
    parts = is_bipartite(G)
    cert = is_koenig_egervary(G)
    proper = has_proper_lmss(G)
    return {
        "n": G.n,
        "m": G.m,
        "alpha": alpha,
        "mu": matching_number(G),
        "bipartite": parts is not None,
        "bipartition": None if parts is None else [G.vertex_names(p) for p in parts],
        "ke_certificate": None
        if cert is None
        else {"S": G.vertex_names(cert.S), "M": G.edge_names(cert.M), "n": cert.n},
        "omega_count": len(enumerate_maximum_stable_sets(G)),
        "psi_count": len(enumerate_psi(G, max_size)),
        "psi_max_size": max_size,
        "proper_lmss": None if proper is None else G.vertex_names(proper),
    }


def cmd_extend_matching(G: Graph, spec: str) -> dict[str, Any]:
    M = parse_matching_spec(G, spec)
    M0 = extendable_to_maximum(G, M)
    return {
        "M": G.edge_names(M),
        "mu": matching_number(G),
        "extendable": M0 is not None,
        "M0": None if M0 is None else G.edge_names(M0),
    }


def cmd_line_graph(G: Graph) -> dict[str, Any]:
    L, lmap = line_graph(G)
    return {
        "n": L.n,
        "m": L.m,
        "vertices": list(L.names),
        "edges": [[L.names[u], L.names[v]] for u, v in L.edges],
        "line_map": {L.names[lmap.forward[e]]: G.vertex_names(G.edges[e]) for e in range(G.m)},
        "edgelist": format_edgelist(L),
    }


def _named_family(G: Graph, family) -> list[list[str]]:
    return sorted(G.vertex_names(S) for S in family)


def cmd_psi(G: Graph, max_size: int | None = None) -> dict[str, Any]:
    alpha, _ = stability_number(G)
    psi = _named_family(G, enumerate_psi(G, max_size))
    return {
        "alpha": alpha,
        "max_size": max_size,
        "count": len(psi),
        "psi": psi,
        "proper": [S for S in psi if len(S) < alpha],
    }


def _human(obj: Any, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            nested = isinstance(v, dict) or (
                isinstance(v, list) and any(isinstance(x, (dict, list)) for x in v)
            )
            if nested and v:
                lines.append(f"{pad}{k}:")
                lines.append(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_flat(v)}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(
            f"{pad}- " + (_human(x, indent + 1).lstrip() if isinstance(x, dict) else _flat(x)) for x in obj
        )
    return pad + _flat(obj)


def _flat(v: Any) -> str:
    if isinstance(v, list):
        return "{" + ", ".join(_flat(x) for x in v) + "}"
    if isinstance(v, str) and "\n" in v:
        return v.replace("\n", " | ")
    return "none" if v is None else str(v)


def _emit(report: dict[str, Any], human: bool) -> None:
    if human:
        print(_human(report))
    else:
        print(json.dumps(report, sort_keys=True, indent=2))


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("edgelist", "graph6"), default="edgelist")
    out = common.add_mutually_exclusive_group()
    out.add_argument("--json", dest="human", action="store_false", help="JSON output (default)")
    out.add_argument("--human", dest="human", action="store_true", help="plain-text output")
    common.set_defaults(human=False)

    parser = argparse.ArgumentParser(prog="lmss", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="basic invariants of a graph")
    p.add_argument("path")
    p.add_argument("--max-size", type=int, default=None)

    p = sub.add_parser("verify", parents=[common], help="run a theorem check")
    p.add_argument("check", choices=sorted(VERIFY_CHECKS))
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("path", nargs="?")
    src.add_argument("--atlas", type=int, metavar="MAX_N")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("extend-matching", parents=[common], help="extend a matching to a maximum one")
    p.add_argument("path")
    p.add_argument("matching", help='endpoint pairs, e.g. "v-x,y-z"')

    p = sub.add_parser("line-graph", parents=[common], help="line graph and edge map")
    p.add_argument("path")

    p = sub.add_parser("psi", parents=[common], help="local maximum stable sets")
    p.add_argument("path")
    p.add_argument("--max-size", type=int, default=None)

    p = sub.add_parser("scan", parents=[common], help="scan the small-graph atlas")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--max-n", type=int)
    src.add_argument("--graph6", metavar="FILE", help="graph6 stream ('-' for stdin)")
    p.add_argument("--check", action="append", choices=CHECKS, required=True)
    p.add_argument("--jobs", type=int, default=1)
    return parser


def _scan_report(command: str, inp: dict[str, Any], config: ScanConfig, human: bool) -> int:
    try:
        summary = scan(config)
    except CounterexampleFound as exc:
        _emit(_envelope(command, inp, {"counterexample": exc.record}), human)
        return 1
    _emit(_envelope(command, inp, summary.to_dict()), human)
    return 1 if summary.violations else 0


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        if args.command == "scan":
            if args.graph6 == "-":
                lines = tuple(sys.stdin.read().splitlines())
            elif args.graph6:
                lines = tuple(Path(args.graph6).read_text(encoding="ascii").splitlines())
            else:
                lines = None
            config = ScanConfig(tuple(args.check), max_n=args.max_n, graph6=lines, jobs=args.jobs)
            inp = {"max_n": args.max_n, "graph6": args.graph6, "checks": args.check, "jobs": args.jobs}
            return _scan_report("scan", inp, config, args.human)

        if args.command == "verify" and args.atlas is not None:
            check = VERIFY_CHECKS[args.check][0]
            config = ScanConfig((check,), max_n=args.atlas, jobs=args.jobs)
            inp = {"atlas": args.atlas, "check": args.check, "jobs": args.jobs}
            return _scan_report("verify", inp, config, args.human)

        G = read_graph(args.path, args.format)
        inp = {"path": args.path, "format": args.format, "graph6": to_graph6(G)}
        if args.command == "analyze":
            results = cmd_analyze(G, args.max_size)
        elif args.command == "extend-matching":
            inp["matching"] = args.matching
            results = cmd_extend_matching(G, args.matching)
        elif args.command == "line-graph":
            results = cmd_line_graph(G)
        elif args.command == "psi":
            results = cmd_psi(G, args.max_size)
        else:
            name, runner = VERIFY_CHECKS[args.check]
            report = runner(G, Path(args.path).name)
            _emit(_envelope("verify", inp, report.to_dict()), args.human)
            return 1 if report.status == "fail" else 0
        _emit(_envelope(args.command, inp, results), args.human)
        return 0
    except (GraphError, OSError, UnicodeDecodeError) as exc:
        print(f"lmss: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
