from itertools import combinations

import networkx as nx
from conftest import cycle, path, petersen, to_simple_nx
from hypothesis import given, settings
from hypothesis import strategies as st

from endgraphs.flow import (
    Unseparable,
    min_edge_cut,
    min_vertex_cut,
    paths_edge_disjoint,
    paths_vertex_disjoint,
    set_disjoint_paths,
)
from endgraphs.graph import FiniteGraph, is_path


@st.composite
def multigraphs(draw, max_n=8):
    n = draw(st.integers(2, max_n))
    pairs = list(combinations(range(n), 2))
    mult = draw(st.lists(st.integers(0, 2), min_size=len(pairs), max_size=len(pairs)))
    return FiniteGraph(range(n), [(u, v, m) for (u, v), m in zip(pairs, mult) if m])


def test_vertex_cut_examples():
    assert min_vertex_cut(cycle(4), {0}, {2}).size == 2
    assert min_vertex_cut(path(3), {0}, {2}).size == 1
    assert isinstance(min_vertex_cut(path(2), {0}, {1}), Unseparable)


def test_petersen_vertex_cut_matches_brute_force():
    g = petersen()
    res = min_vertex_cut(g, {0}, {7})
    brute = min(
        len(s)
        for r in range(4)
        for s in combinations([v for v in range(10) if v not in (0, 7)], r)
        if not nx.has_path(to_simple_nx(g.remove_vertices(s)), 0, 7)
    )
    assert res.size == brute == 3


def test_edge_cut_examples():
    assert min_edge_cut(path(5), {0}, {4}).size == 1
    assert min_edge_cut(FiniteGraph("uv", [("u", "v", 2)]), {"u"}, {"v"}).size == 2
    g = petersen()
    assert all(min_edge_cut(g, {u}, {v}).size == 3 for u, v in combinations(range(10), 2))


@settings(max_examples=150, deadline=None)
@given(multigraphs())
def test_edge_menger_against_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    for u, v, m in g.edges():
        h.add_edge(u, v, capacity=m)
    for u, v in [(0, max(g.vertices))]:
        res = min_edge_cut(g, {u}, {v})
        assert res.size == nx.maximum_flow_value(h, u, v)
        assert res.cut.verify(g) and len(res.paths) == res.size and paths_edge_disjoint(g, res.paths)


@settings(max_examples=150, deadline=None)
@given(multigraphs())
def test_vertex_menger_against_networkx(g):
    s, t = 0, max(g.vertices)
    res = min_vertex_cut(g, {s}, {t})
    if t in g.adj[s]:
        assert isinstance(res, Unseparable)
        return
    h = to_simple_nx(g)
    expected = nx.node_connectivity(h, s, t) if nx.has_path(h, s, t) else 0
    assert res.size == expected == len(res.paths) == len(res.cut.separator)
    assert res.cut.verify(g) and paths_vertex_disjoint(res.paths, internal_only=True)
    assert all(p[0] == s and p[-1] == t and is_path(g, list(p)) for p in res.paths)


@settings(max_examples=100, deadline=None)
@given(multigraphs(), st.data())
def test_set_disjoint_paths_duality(g, data):
    vs = sorted(g.vertices)
    a = set(data.draw(st.lists(st.sampled_from(vs), min_size=1, max_size=3)))
    b = set(data.draw(st.lists(st.sampled_from(vs), min_size=1, max_size=3)))
    res = set_disjoint_paths(g, a, b)
    assert len(res.paths) == res.size == len(res.cut.separator)
    assert paths_vertex_disjoint(res.paths)
    for p in res.paths:
        assert p[0] in a and p[-1] in b and is_path(g, list(p))
        assert not set(p[1:]) & a and not set(p[:-1]) & b
    # the separator meets every a-b path
    rest = to_simple_nx(g.remove_vertices(res.cut.separator))
    assert not any(nx.has_path(rest, x, y) for x in a - res.cut.separator for y in b - res.cut.separator)
    limited = set_disjoint_paths(g, a, b, limit=1)
    assert limited.size == min(1, res.size)
