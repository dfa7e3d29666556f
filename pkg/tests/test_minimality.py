from itertools import combinations

import networkx as nx
import pytest
from conftest import complete, cycle, to_simple_nx

from endgraphs.gallery import make, make_presentation
from endgraphs.graph import FiniteGraph, GraphInputError
from endgraphs.minimality import (
    MODES,
    check_minimality,
    classify,
    cycles_degree_k,
    degree_census,
    greedy_deletion_trace,
    mask_k_connected,
    reverify,
    small_degree_witness,
    sweep,
)
from endgraphs.smallgraphs import connected_graphs, to_finite_graph

K23 = FiniteGraph(range(5), [(a, b) for a in (0, 1) for b in (2, 3, 4)])


def nx_kconn(G, k):
    return G.number_of_nodes() > k and nx.node_connectivity(G) >= k


@pytest.mark.parametrize("mode", MODES)
@pytest.mark.parametrize("g,k", [(K23, 2), (cycle(6), 2), (complete(5), 4), (complete(4), 2)])
def test_reports_reverify(g, k, mode):
    rep = check_minimality(g, k, mode)
    assert reverify(g, rep)
    assert rep.to_json()["schema"] == "minimality-report/1"
    assert "infinite" in rep.header


def test_k23_modes():
    want = {"edge-min-kconn": True, "vertex-min-kconn": False, "edge-min-kedge": True,
            "vertex-min-kedge": False, "subgraph-min": False, "induced-subgraph-min": False}
    for mode, v in want.items():
        assert check_minimality(K23, 2, mode).verdict is v, mode
    rep = check_minimality(K23, 2, "edge-min-kconn")
    assert len(rep.witnesses) == 6


def test_cycle_is_every_kind_of_minimal():
    for mode in MODES:
        assert check_minimality(cycle(6), 2, mode).verdict


def test_not_connected_counterexample():
    rep = check_minimality(cycle(6), 3, "edge-min-kconn")
    assert not rep.verdict and not rep.connected and reverify(cycle(6), rep)


def test_tampered_witness_fails():
    rep = check_minimality(cycle(6), 2, "vertex-min-kconn")
    v = next(iter(rep.witnesses))
    rep.witnesses[v] = frozenset()
    assert not reverify(cycle(6), rep)


def test_bad_mode_and_cap():
    with pytest.raises(GraphInputError):
        check_minimality(K23, 2, "nope")
    with pytest.raises(GraphInputError):
        check_minimality(cycle(20), 2, "subgraph-min")


def test_o44_vertex_minimal_and_census():
    g, _ = make("O", {"k": 4, "l": 4})
    rep = check_minimality(g, 4, "vertex-min-kconn")
    assert rep.verdict and reverify(g, rep)
    c = degree_census(g, 4)
    assert len(g) == 8 and c.small_bound == 5 and len(c.small) == 8
    assert all(g.degree(v) == 5 for v in g.vertices)


def test_census_examples():
    k25 = FiniteGraph(range(7), [(a, b) for a in (0, 1) for b in range(2, 7)])
    assert len(degree_census(k25, 2).degree_k) == 5
    assert len(degree_census(cycle(6), 2).degree_k) == 6


def test_cycles_degree_k():
    r = cycles_degree_k(cycle(5), 2)
    assert r.ok and r.applies and r.checked == 1
    # K4 with one edge subdivided: 2-connected, degree-3 triangle avoids degree 2
    sub = FiniteGraph(range(5), [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (0, 4), (4, 3)])
    r = cycles_degree_k(sub, 2)
    assert not r.ok and set(r.violating) == {0, 1, 2} and not r.applies and r.warning
    r3 = cycles_degree_k(sub, 3)
    assert not r3.applies


@pytest.mark.parametrize("name,params,k,mode,kind", [
    ("Tr", {"r": 3, "k": 2}, 2, "vertex-min-kconn", "vertex"),
    ("R2", {}, 3, "edge-min-kedge", "edge"),
    ("edgemin", {"r": 2, "k": 3}, 3, "edge-min-kedge", "edge"),
])
def test_witness_ends(name, params, k, mode, kind):
    w = small_degree_witness(make_presentation(name, params), k, mode, 6)
    assert w.kind == "end" and w.estimate["kind"] == kind
    assert w.estimate["exact"] and int(w.estimate["upper"]) <= k


def test_witness_vertex_on_finite():
    w = small_degree_witness(K23, 2, "edge-min-kedge")
    assert w.kind == "vertex" and w.degree == 2
    assert small_degree_witness(complete(5), 2, "edge-min-kedge").kind == "not found at budget"


def test_greedy_traces():
    tr = greedy_deletion_trace(make_presentation("Kkaleph", {"k": 3}), 3, "infinite-side", 4, 1)
    assert [s["window_k_connected"] for s in tr.steps][:2] == [True, True]
    assert not tr.steps[-1]["window_k_connected"]
    tr = greedy_deletion_trace(make_presentation("ladder"), 2, "odd-rungs", 6, 1)
    assert all(s["window_k_connected"] for s in tr.steps) and tr.final_components == 1
    tr = greedy_deletion_trace(make_presentation("greedyVdel", {"k": 4}), 4, "x-vertices", 4, 1, steps=5)
    assert len(tr.steps) == 5 and all(s["window_k_connected"] for s in tr.steps)
    with pytest.raises(GraphInputError):
        greedy_deletion_trace(make_presentation("ladder"), 2, "nope")


def _adj(n, G):
    out = [0] * n
    for u, v in G.edges:
        out[u] |= 1 << v
        out[v] |= 1 << u
    return tuple(out)


@pytest.mark.parametrize("k", [2, 3])
def test_classify_matches_networkx(k):
    for n in range(1, 7):
        for adj in connected_graphs(n):
            G = to_simple_nx(to_finite_graph(adj))
            rec = classify(adj, k)
            assert (rec is not None) == nx_kconn(G, k)
            if rec is None:
                continue
            emin = all(not nx_kconn(nx.restricted_view(G, [], [e]), k) for e in G.edges)
            vmin = all(not nx_kconn(G.subgraph(set(G) - {v}), k) for v in G)
            induced = not any(nx_kconn(G.subgraph(c), k) for s in range(k + 1, n) for c in combinations(G, s))
            # subgraph-min by brute force over every spanning edge subset and vertex subset
            proper = False
            for s in range(k + 1, n + 1):
                for c in combinations(G, s):
                    H = G.subgraph(c)
                    es = list(H.edges)
                    for r in range(len(es) + 1):
                        for keep in combinations(es, r):
                            if (s < n or r < len(G.edges)) and nx_kconn(nx.Graph(keep) if keep else nx.empty_graph(0), k) \
                                    and len(set().union(*keep)) == s:
                                proper = True
                                break
                        if proper:
                            break
                    if proper:
                        break
                if proper:
                    break
            assert (rec.edge_min, rec.vertex_min, rec.induced_min, rec.subgraph_min) == (emin, vmin, induced, not proper)


def test_mask_k_connected_small():
    full = lambda n: (1 << n) - 1  # noqa: E731
    tri = (0b110, 0b101, 0b011)
    assert mask_k_connected(tri, full(3), 2) and not mask_k_connected(tri, full(3), 3)


@pytest.mark.parametrize("k", [2, 3])
def test_sweep_seven(k):
    s = sweep(7, k)
    assert s.ok and s.graphs == 996 and s.edge_min > 0 and s.vertex_min > 0
    assert s.subgraph_min <= s.edge_min and s.induced_min <= s.vertex_min
