import networkx as nx
import pytest

from endgraphs.graph import FiniteGraph


def petersen() -> FiniteGraph:
    g = nx.petersen_graph()
    return FiniteGraph(g.nodes, g.edges)


def complete(n: int) -> FiniteGraph:
    return FiniteGraph(range(n), [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle(n: int) -> FiniteGraph:
    return FiniteGraph(range(n), [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> FiniteGraph:
    return FiniteGraph(range(n), [(i, i + 1) for i in range(n - 1)])


def to_nx(g: FiniteGraph) -> nx.MultiGraph:
    h = nx.MultiGraph()
    h.add_nodes_from(g.vertices)
    for u, v, m in g.edges():
        for _ in range(m):
            h.add_edge(u, v)
    return h


def to_simple_nx(g: FiniteGraph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from((u, v) for u, v, _ in g.edges())
    return h


@pytest.fixture
def petersen_graph():
    return petersen()
