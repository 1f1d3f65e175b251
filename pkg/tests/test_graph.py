import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import small_graphs
from oracles import adjacency_sets, brute_isomorphic, degree_pair_sum, permuted, random_graph
from lmss import (
    DuplicateEdge,
    DuplicateVertex,
    InvalidCutSides,
    LoopRejected,
    TooLarge,
    UnknownEdge,
    UnknownVertex,
    build_graph,
    canonical_certificate,
    cut_set,
    delete,
    fixture,
    induced_subgraph,
    is_bipartite,
    line_graph,
    neighborhood,
)
from lmss.graph import complete_graph, cycle_graph, from_edges, path_graph, star_graph


def edge_names(G):
    return sorted(tuple(sorted((G.names[u], G.names[v]))) for u, v in G.edges)


def test_build_k2():
    G = build_graph(["a", "b"], [("a", "b")])
    assert G.n == 2 and G.edges == ((0, 1),)
    assert G.edge_id(1, 0) == 0


@pytest.mark.parametrize(
    "names, pairs, exc",
    [
        (["a"], [("a", "a")], LoopRejected),
        (["a", "b"], [("a", "b"), ("b", "a")], DuplicateEdge),
        (["a", "b"], [("a", "c")], UnknownVertex),
        (["a", "a"], [], DuplicateVertex),
    ],
)
def test_build_rejects(names, pairs, exc):
    with pytest.raises(exc):
        build_graph(names, pairs)


def test_fig1_w_shape():
    W = fixture("FIG1_W")
    assert W.m == 7
    assert W.names == tuple("abcdefg")


@given(small_graphs())
def test_graph_invariants(G):
    for u in range(G.n):
        assert u not in G.adj[u]
        for w in G.adj[u]:
            assert u in G.adj[w]
    assert list(G.edges) == sorted(set(G.edges))
    assert all(u < v for u, v in G.edges)
    assert sum(len(r) for r in G.adj) == 2 * G.m


def test_neighborhood_examples():
    W = fixture("FIG1_W")
    eg = W.indices("eg")
    assert W.vertex_names(neighborhood(W, eg, closed=True)) == list("cdefg")
    assert neighborhood(W, (), closed=False) == ()
    K2 = build_graph("ab", [("a", "b")])
    assert K2.vertex_names(neighborhood(K2, [0])) == ["b"]
    with pytest.raises(UnknownVertex):
        neighborhood(K2, [5])


def test_induced_subgraph_fig1_is_c5():
    W = fixture("FIG1_W")
    H, remap = induced_subgraph(W, W.indices("cdefg"))
    # direct filter of the fixture's edge list
    keep = set("cdefg")
    expected = sorted(tuple(sorted(e)) for e in edge_names(W) if set(e) <= keep)
    assert edge_names(H) == expected
    assert H.n == 5 and H.m == 5 and all(H.degree(v) == 2 for v in range(5))
    assert set(remap) == set(W.indices("cdefg"))


def test_induced_subgraph_trivial():
    G = cycle_graph(5)
    H, _ = induced_subgraph(G, range(5))
    assert H == G
    E, _ = induced_subgraph(G, [])
    assert E.n == 0 and E.m == 0


@given(small_graphs(max_n=7), st.data())
def test_induced_composition(G, data):
    X = data.draw(st.sets(st.integers(0, max(G.n - 1, 0)), max_size=G.n)) if G.n else set()
    Y = data.draw(st.sets(st.sampled_from(sorted(X)))) if X else set()
    GX, rx = induced_subgraph(G, X)
    GXY, _ = induced_subgraph(GX, [rx[y] for y in Y])
    GY, _ = induced_subgraph(G, Y)
    assert GXY == GY


def test_delete_examples():
    K3 = complete_graph(3)
    assert delete(K3, W=[0]).m == 1
    P = delete(cycle_graph(4), F=[0])
    assert P.m == 3 and sorted(P.degree(v) for v in range(4)) == [1, 1, 2, 2]
    W = fixture("FIG1_W")
    D = delete(W, W=W.indices("ab"))
    assert D.n == 5
    assert edge_names(D) == sorted([("c", "d"), ("d", "e"), ("c", "g"), ("f", "g"), ("e", "f")])
    with pytest.raises(UnknownEdge):
        delete(W, F=[99])


def test_cut_set_fig2():
    G = fixture("FIG2_G")
    cut = set(cut_set(G, G.indices("xy"), G.indices("zvu")))
    for a, b in ["xz", "yz", "yv", "yu"]:
        assert G.edge_by_names(a, b) in cut
    assert G.edge_by_names("u", "v") not in cut
    assert len(cut) == 4


def test_cut_set_errors_and_empty():
    P3 = path_graph(3)
    assert cut_set(P3, [0], [2]) == ()
    with pytest.raises(InvalidCutSides):
        cut_set(P3, [0], [0, 1])
    with pytest.raises(InvalidCutSides):
        cut_set(P3, [], [1])


def test_line_graph_examples():
    L, lmap = line_graph(path_graph(3))
    assert L.n == 2 and L.m == 1
    L, _ = line_graph(star_graph(3))
    assert L.n == 3 and L.m == 3
    L, _ = line_graph(cycle_graph(4))
    assert canonical_certificate(L) == canonical_certificate(cycle_graph(4))
    L, lmap = line_graph(from_edges(3, []))
    assert L.n == 0 and lmap.forward == ()


@settings(max_examples=150)
@given(small_graphs())
def test_line_graph_degree_identities(G):
    L, lmap = line_graph(G)
    assert L.n == G.m
    assert L.m == degree_pair_sum(G)
    assert lmap.to_edges(lmap.to_line(range(G.m))) == tuple(range(G.m))
    for e, (u, v) in enumerate(G.edges):
        assert L.degree(lmap.forward[e]) == G.degree(u) + G.degree(v) - 2
    # adjacency in L(G) is exactly edge incidence in G
    for a in range(G.m):
        for b in range(a + 1, G.m):
            share = bool(set(G.edges[a]) & set(G.edges[b]))
            assert L.has_edge(lmap.forward[a], lmap.forward[b]) == share


def bfs_two_colour(G):
    adj = adjacency_sets(G)
    colour = {}
    for s in range(G.n):
        if s in colour:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def test_bipartite_examples():
    left, right = is_bipartite(path_graph(4))
    assert len(left) == len(right) == 2
    assert is_bipartite(complete_graph(3)) is None
    assert is_bipartite(fixture("FIG7_G")) is not None


@given(small_graphs())
def test_bipartite_matches_oracle(G):
    parts = is_bipartite(G)
    assert (parts is not None) == bfs_two_colour(G)
    if parts:
        left, right = map(set, parts)
        assert left | right == set(range(G.n)) and not left & right
        assert all((u in left) != (v in left) for u, v in G.edges)


@pytest.mark.parametrize("name", ["C4", "FIG4_G", "FIG5_G", "FIG7_G", "K5", "K33", "Q3"])
def test_certificate_relabel_invariance(name):
    graphs = {
        "C4": cycle_graph(4),
        "K5": complete_graph(5),
        "K33": from_edges(6, [(i, j) for i in range(3) for j in range(3, 6)]),
        "Q3": from_edges(8, [(i, i ^ b) for i in range(8) for b in (1, 2, 4) if i < i ^ b]),
    }
    G = graphs.get(name) or fixture(name)
    G = from_edges(G.n, G.edges)
    rng = random.Random(name)
    cert = canonical_certificate(G)
    for _ in range(100):
        assert canonical_certificate(permuted(G, rng)) == cert


def test_certificate_distinguishes():
    assert canonical_certificate(path_graph(3)) != canonical_certificate(complete_graph(3))
    # same degree sequence, not isomorphic
    two_triangles = from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    assert canonical_certificate(two_triangles) != canonical_certificate(cycle_graph(6))


def test_certificate_size_bound():
    with pytest.raises(TooLarge):
        canonical_certificate(cycle_graph(11))
    # an asymmetric tree refines to a discrete partition, so n > 10 is fine
    asym = from_edges(12, [(i, i + 1) for i in range(10)] + [(2, 11)])
    assert canonical_certificate(asym) == canonical_certificate(permuted(asym, random.Random(1)))


@settings(max_examples=60, deadline=None)
@given(small_graphs(max_n=6), st.randoms(use_true_random=False))
def test_certificate_equal_iff_isomorphic(G, rng):
    H = random_graph(rng, G.n, 0.5)
    same = canonical_certificate(G) == canonical_certificate(H)
    assert same == brute_isomorphic(G, H)
    assert canonical_certificate(permuted(G, rng)) == canonical_certificate(G)
