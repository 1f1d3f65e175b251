import json
import subprocess
import sys
from pathlib import Path

import pytest

from oracles import brute_alpha, brute_mu, brute_psi
from lmss import is_local_maximum_stable, line_graph, parse_edgelist, read_graph
from lmss.cli import run
from lmss.formats import to_graph6
from lmss.graph import cycle_graph, path_graph

FIX = Path(__file__).resolve().parents[1] / "fixtures"


def call(capsys, *argv):
    code = run([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def call_json(capsys, *argv):
    code, out, err = call(capsys, *argv)
    doc = json.loads(out)
    assert doc["schema_version"] == 1
    # stable key order: the text is exactly the sorted re-serialisation
    assert out.strip() == json.dumps(doc, sort_keys=True, indent=2)
    return code, doc


def edge_ids(G, names):
    return [G.edge_by_names(*n.split("-")) for n in names]


def test_analyze_fig2_h(capsys):
    code, doc = call_json(capsys, "analyze", FIX / "FIG2_H")
    r = doc["results"]
    assert code == 0 and r["alpha"] == 4 and r["mu"] == 3
    cert = r["ke_certificate"]
    assert cert["S"] == ["a", "b", "c", "d"]
    G = read_graph(FIX / "FIG2_H")
    # re-check the certificate from its names alone
    S = G.indices(cert["S"])
    assert all(not G.has_edge(u, v) for u in S for v in S)
    M = edge_ids(G, cert["M"])
    ends = [v for e in M for v in G.edges[e]]
    assert len(ends) == len(set(ends)) and len(S) + len(M) == G.n


def test_analyze_fig2_g_and_k2(capsys, tmp_path):
    code, doc = call_json(capsys, "analyze", FIX / "FIG2_G")
    assert code == 0 and doc["results"]["ke_certificate"] is None
    p = tmp_path / "k2"
    p.write_text("a b\n")
    _, doc = call_json(capsys, "analyze", p)
    r = doc["results"]
    assert r["alpha"] == 1 and r["mu"] == 1 and r["ke_certificate"] is not None


def test_analyze_graph6_input(capsys, tmp_path):
    p = tmp_path / "c5.g6"
    p.write_text(to_graph6(cycle_graph(5)) + "\n")
    code, doc = call_json(capsys, "analyze", p, "--format", "graph6")
    assert code == 0 and doc["results"]["alpha"] == 2 and doc["results"]["proper_lmss"] is None


def test_verify_fixture_commands(capsys):
    code, doc = call_json(capsys, "verify", "theorem2", FIX / "FIG3_G")
    assert code == 0 and doc["results"]["status"] == "pass" and doc["results"]["instances"]
    G = read_graph(FIX / "FIG3_G")
    L, lmap = line_graph(G)
    for inst in doc["results"]["instances"]:
        assert is_local_maximum_stable(G, G.indices(inst["S"]))
        assert is_local_maximum_stable(L, lmap.to_line(edge_ids(G, inst["M"])))
    code, doc = call_json(capsys, "verify", "lemma-match", FIX / "FIG2_H")
    assert code == 0 and doc["results"]["status"] == "pass"
    code, doc = call_json(capsys, "verify", "nt", FIX / "FIG1_W")
    assert code == 0
    code, doc = call_json(capsys, "verify", "corollary1", FIX / "FIG6_G")
    assert code == 0 and any(i["outcome"] == "info" for i in doc["results"]["instances"])


def test_verify_atlas(capsys):
    code, doc = call_json(capsys, "verify", "theorem2", "--atlas", 5)
    r = doc["results"]
    assert code == 0 and r["graphs_processed"] == 31 and r["violations"] == []


def test_extend_matching(capsys):
    code, doc = call_json(capsys, "extend-matching", FIX / "FIG3_G", "v-x,y-z")
    r = doc["results"]
    assert code == 0 and r["extendable"] and len(r["M0"]) == 3
    assert set(r["M"]) <= set(r["M0"])
    assert brute_mu(read_graph(FIX / "FIG3_G")) == len(r["M0"])
    for path, spec in [("FIG5_G", "m1-m2,a1-b1,c1-d1"), ("FIG6_G", "a-b,c-d,f-h")]:
        code, doc = call_json(capsys, "extend-matching", FIX / path, spec)
        assert code == 0 and doc["results"]["extendable"] is False and doc["results"]["M0"] is None


@pytest.mark.parametrize("spec", ["a-z", "a-b,b-c", "a-c"])
def test_extend_matching_bad_spec(capsys, spec):
    code, out, err = call(capsys, "extend-matching", FIX / "FIG1_W", spec)
    assert code == 2 and out == "" and "error" in err


def test_line_graph_c4(capsys, tmp_path):
    p = tmp_path / "c4"
    p.write_text("a b\nb c\nc d\nd a\n")
    code, doc = call_json(capsys, "line-graph", p)
    r = doc["results"]
    assert code == 0 and r["n"] == 4 and r["m"] == 4
    L = parse_edgelist(r["edgelist"])
    assert L.n == 4 and all(L.degree(v) == 2 for v in range(4))
    assert sorted(r["line_map"]) == sorted(r["vertices"])


def test_psi_fig1(capsys):
    code, doc = call_json(capsys, "psi", FIX / "FIG1_W")
    r = doc["results"]
    assert code == 0
    for S in (["a"], ["d", "f"], ["e", "g"]):
        assert S in r["psi"]
    G = read_graph(FIX / "FIG1_W")
    assert sorted(G.vertex_names(S) for S in brute_psi(G)) == r["psi"]
    assert r["alpha"] == brute_alpha(G)
    assert all(len(S) < r["alpha"] for S in r["proper"])
    code, doc = call_json(capsys, "psi", FIX / "FIG1_W", "--max-size", 1)
    assert all(len(S) == 1 for S in doc["results"]["psi"])


def test_scan_open_question(capsys):
    code, doc = call_json(capsys, "scan", "--max-n", 4, "--check", "open_question")
    r = doc["results"]
    assert code == 0 and r["graphs_processed"] == 10
    assert sum(r["open_question"]["classification"].values()) == 10


def test_scan_graph6_file_and_stdin(capsys, tmp_path, monkeypatch):
    p = tmp_path / "in.g6"
    p.write_text(f"{to_graph6(path_graph(3))}\n{to_graph6(cycle_graph(4))}\n")
    code, doc = call_json(capsys, "scan", "--graph6", p, "--check", "theorem2", "--check", "corollary1")
    assert code == 0 and doc["results"]["graphs_processed"] == 2
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(p.read_text()))
    code, doc2 = call_json(capsys, "scan", "--graph6", "-", "--check", "theorem2", "--check", "corollary1")
    assert doc2["results"] == doc["results"]


def test_scan_bad_graph6(capsys, tmp_path):
    p = tmp_path / "bad.g6"
    p.write_text("Bg\nBh\n")
    code, out, err = call(capsys, "scan", "--graph6", p, "--check", "theorem2")
    assert code == 2 and "record 1" in err


def test_exit_code_on_violation(capsys, monkeypatch):
    import lmss.atlas as atlas
    from lmss.report import FAIL, Instance, VerificationReport

    def broken(G, gid):
        return VerificationReport(gid, "nt_extension", [Instance(FAIL, {})])

    monkeypatch.setitem(atlas._RUNNERS, "nt_extension", broken)
    code, doc = call_json(capsys, "scan", "--max-n", 3, "--check", "nt_extension")
    assert code == 1 and "counterexample" in doc["results"]


@pytest.mark.parametrize(
    "text, where",
    [("a a\n", "line 1"), ("a b\nb a\n", "line 2"), ("a b c\n", "line 1")],
)
def test_parse_errors_exit_2(capsys, tmp_path, text, where):
    p = tmp_path / "bad"
    p.write_text(text)
    code, out, err = call(capsys, "analyze", p)
    assert code == 2 and where in err


def test_usage_errors(capsys, tmp_path):
    assert call(capsys, "verify", "nope", FIX / "FIG1_W")[0] == 2
    assert call(capsys, "analyze", tmp_path / "missing")[0] == 2
    assert call(capsys)[0] == 2


def test_human_output(capsys):
    code, out, _ = call(capsys, "analyze", FIX / "FIG2_H", "--human")
    assert code == 0 and "alpha: 4" in out and not out.lstrip().startswith("{")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lmss", "analyze", str(FIX / "FIG7_G")],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["results"]["proper_lmss"] is None
