import math
import random
from itertools import combinations

import networkx as nx
import pytest
from conftest import complete, cycle, path, petersen, to_simple_nx

from endgraphs.connectivity import (
    edge_connectivity,
    enumerate_cycles,
    girth,
    is_k_connected,
    is_k_edge_connected,
    k_core,
    vertex_connectivity,
)
from endgraphs.graph import (
    FiniteGraph,
    GraphInputError,
    components,
    edge_boundary,
    edge_boundary_size,
    from_dot,
    from_json,
    from_json_obj,
    to_dot,
    to_json_obj,
    vertex_boundary,
)
from endgraphs.minors import complete_minor, verify_branch_sets


def test_loops_rejected():
    with pytest.raises(GraphInputError):
        FiniteGraph([1], [(1, 1)])


def test_multiplicity_and_symmetry():
    g = FiniteGraph("ab", [("a", "b", 2)])
    assert g.multiplicity("a", "b") == g.multiplicity("b", "a") == 2
    assert g.degree("a") == 2 and g.simple_degree("a") == 1


def test_vertex_boundary_examples():
    p3 = FiniteGraph("abc", [("a", "b"), ("b", "c")])
    assert vertex_boundary(p3, {"a", "b"}) == {"b"}
    assert vertex_boundary(complete(4), {0, 1}) == {0, 1}


def test_edge_boundary_examples():
    p3 = FiniteGraph("abc", [("a", "b"), ("b", "c")])
    assert edge_boundary_size(p3, {"a", "b"}) == 1
    assert edge_boundary_size(complete(4), {0, 1}) == 4
    doubled = FiniteGraph("xyz", [("x", "y", 2), ("y", "z", 2), ("x", "z", 2)])
    assert edge_boundary_size(doubled, {"x"}) == 4


def test_boundary_consistency_random():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(2, 9)
        edges = [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.4]
        g = FiniteGraph(range(n), edges)
        h = {v for v in range(n) if rng.random() < 0.5}
        bv = vertex_boundary(g, h)
        for e in edge_boundary(g, h):
            inside = e[0] if e[0] in h else e[1]
            assert inside in bv


def test_y2_branch_boundary_matches_scan():
    from endgraphs.gallery import make_presentation
    from endgraphs.presentation import ball

    p = make_presentation("Y", {"l": 2})
    g = ball(p, 3).graph
    column = {v for v in g.vertices if v.split(".")[1] == "0"}  # one leg of every copy
    scan = {v for v in column if any(u not in column for u in g.adj[v])}
    assert vertex_boundary(g, column) == scan


@pytest.mark.parametrize("g,k,ok", [(complete(5), 4, True), (petersen(), 4, False), (petersen(), 3, True)])
def test_is_k_connected(g, k, ok):
    rep = is_k_connected(g, k)
    assert rep.ok == ok
    if not ok:
        assert len(rep.separator) < k
        assert len(components(g.remove_vertices(rep.separator))) > 1


def test_local_connectivities():
    assert vertex_connectivity(cycle(4)) == 2
    assert edge_connectivity(path(5)) == 1
    assert edge_connectivity(FiniteGraph("uv", [("u", "v", 2)])) == 2
    pet = petersen()
    assert all(r.size == 3 for r in [__import__("endgraphs.flow", fromlist=["x"]).min_edge_cut(pet, {0}, {v}) for v in range(1, 10)])
    assert is_k_edge_connected(cycle(6), 2)
    assert not is_k_edge_connected(path(4), 2)


def test_is_k_connected_matches_definition_small():
    """Exhaustive separator enumeration on all graphs up to 6 vertices."""
    from endgraphs.smallgraphs import all_graphs, to_finite_graph

    for n in range(1, 7):
        for adj in all_graphs(n):
            g = to_finite_graph(adj)
            for k in (1, 2, 3):
                brute = n >= k + 1 and all(
                    len(components(g.remove_vertices(s))) == 1 for r in range(k) for s in combinations(range(n), r)
                )
                assert bool(is_k_connected(g, k)) == brute


def test_girth_examples():
    assert girth(cycle(5)) == 5
    assert girth(path(4)) == math.inf
    assert girth(petersen()) == 5


def test_cycle_enumeration_against_networkx():
    k4 = complete(4)
    cycles = list(enumerate_cycles(k4, 4))
    assert sorted(len(c) for c in cycles) == [3, 3, 3, 3, 4, 4, 4]
    assert len(list(enumerate_cycles(cycle(6), 6))) == 1
    assert list(enumerate_cycles(path(5), 5)) == []
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(3, 7)
        g = FiniteGraph(range(n), [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.5])
        ours = list(enumerate_cycles(g, n))
        assert len(ours) == len(set(ours))
        theirs = list(nx.simple_cycles(to_simple_nx(g)))
        assert len(ours) == len([c for c in theirs if len(c) >= 3])


def test_k_core():
    assert len(k_core(complete(5), 4)) == 5
    assert len(k_core(path(6), 2)) == 0


def test_complete_minor_examples():
    assert complete_minor(complete(5), 4).found
    res = complete_minor(petersen(), 5)
    assert res.found and verify_branch_sets(petersen(), res.branch_sets)


def test_planar_window_has_no_k5_minor():
    from endgraphs.gallery import make_presentation
    from endgraphs.presentation import ball

    p = make_presentation("G", {"k": 4})
    r = 0
    while len(ball(p, r + 1).graph) <= 20:
        r += 1
    g = ball(p, r).graph
    assert complete_minor(g, 5).status == "none"
    assert len(k_core(ball(p, 3).graph, 4)) >= 0


def test_branch_set_verifier_rejects_bad_sets():
    g = cycle(4)
    assert not verify_branch_sets(g, [{0}, {2}])  # not adjacent
    assert not verify_branch_sets(g, [{0, 2}, {1}])  # not connected
    assert verify_branch_sets(g, [{0}, {1}])


def test_json_and_dot_roundtrip():
    g = FiniteGraph(["a", "b", "c"], [("a", "b", 2), ("b", "c")])
    assert from_json_obj(to_json_obj(g)) == g
    assert from_dot(to_dot(g)) == g


def test_json_error_has_position():
    with pytest.raises(GraphInputError, match="line 1 column"):
        from_json('{"vertices": [')


def test_small_graph_counts():
    """Isomorphism classes per order (OEIS A000088 and A001349)."""
    from endgraphs.smallgraphs import all_graphs, connected_graphs

    assert [len(all_graphs(n)) for n in range(1, 8)] == [1, 2, 4, 11, 34, 156, 1044]
    assert [len(connected_graphs(n)) for n in range(1, 9)] == [1, 1, 2, 6, 21, 112, 853, 11117]
