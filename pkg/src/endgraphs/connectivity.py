"""Connectivity tests, girth, cycle enumeration and k-cores on finite graphs."""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterator

from .flow import CutResult, Unseparable, min_edge_cut, min_vertex_cut
from .graph import FiniteGraph, components, vkey, vsorted


@dataclass(frozen=True)
class ConnectivityReport:
    """Verdict plus witness.

    ``separator`` is a vertex set (or edge list) of size < k whose removal
    disconnects the graph when ``ok`` is false; otherwise ``pairs`` lists the
    local connectivities that were certified by disjoint path systems.
    """

    ok: bool
    k: int
    separator: object = None
    pairs: tuple = ()
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _local_vertex(g: FiniteGraph, u, v) -> CutResult:
    return min_vertex_cut(g, {u}, {v})


def vertex_connectivity_pairs(g: FiniteGraph) -> Iterator[tuple]:
    """Pairs whose local connectivities determine kappa (Esfahanian-Hakimi)."""
    v = min(g.vertices, key=lambda x: (g.simple_degree(x), vkey(x)))
    nb = g.adj[v]
    for w in vsorted(g.vertices):
        if w != v and w not in nb:
            yield v, w
    nbs = vsorted(nb)
    for i, x in enumerate(nbs):
        for y in nbs[i + 1 :]:
            if y not in g.adj[x]:
                yield x, y


def is_k_connected(g: FiniteGraph, k: int) -> ConnectivityReport:
    n = len(g)
    if k <= 0:
        return ConnectivityReport(True, k)
    if n < k + 1:
        return ConnectivityReport(False, k, reason=f"only {n} vertices")
    comps = components(g)
    if len(comps) > 1:
        return ConnectivityReport(False, k, separator=frozenset(), reason="disconnected")
    pairs = []
    for u, w in vertex_connectivity_pairs(g):
        res = _local_vertex(g, u, w)
        if isinstance(res, Unseparable):  # cannot happen for non-adjacent pairs
            continue
        if res.size < k:
            return ConnectivityReport(False, k, separator=res.cut.separator, pairs=((u, w, res.size),))
        pairs.append((u, w, res.size))
    return ConnectivityReport(True, k, pairs=tuple(pairs))


def vertex_connectivity(g: FiniteGraph) -> int:
    n = len(g)
    if n <= 1:
        return 0
    if len(components(g)) > 1:
        return 0
    best = n - 1
    for u, w in vertex_connectivity_pairs(g):
        res = _local_vertex(g, u, w)
        best = min(best, res.size)
    return best


def is_k_edge_connected(g: FiniteGraph, k: int) -> ConnectivityReport:
    if k <= 0:
        return ConnectivityReport(True, k)
    if len(g) < 2:
        return ConnectivityReport(False, k, reason="fewer than 2 vertices")
    order = vsorted(g.vertices)
    root = order[0]
    pairs = []
    for v in order[1:]:
        res = min_edge_cut(g, {root}, {v})
        if res.size < k:
            return ConnectivityReport(False, k, separator=res.cut.edges, pairs=((root, v, res.size),))
        pairs.append((root, v, res.size))
    return ConnectivityReport(True, k, pairs=tuple(pairs))


def edge_connectivity(g: FiniteGraph) -> int:
    if len(g) < 2:
        return 0
    order = vsorted(g.vertices)
    return min(min_edge_cut(g, {order[0]}, {v}).size for v in order[1:])


def girth(g: FiniteGraph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests.

    A parallel edge counts as a cycle of length 2.
    """
    if any(m > 1 for nb in g.adj.values() for m in nb.values()):
        return 2
    best = math.inf
    for s in vsorted(g.vertices):
        dist = {s: 0}
        parent = {s: None}
        queue = deque([s])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for u in g.adj[v]:
                if u not in dist:
                    dist[u] = dist[v] + 1
                    parent[u] = v
                    queue.append(u)
                elif parent[v] != u:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def canonical_cycle(cycle) -> tuple:
    """Rotate to start at the least vertex and pick the lesser direction."""
    c = list(cycle)
    i = min(range(len(c)), key=lambda j: vkey(c[j]))
    c = c[i:] + c[:i]
    if len(c) > 2 and vkey(c[-1]) < vkey(c[1]):
        c = [c[0]] + c[1:][::-1]
    return tuple(c)


def enumerate_cycles(g: FiniteGraph, max_len: int) -> Iterator[tuple]:
    """Every simple cycle of length <= ``max_len`` exactly once.

    Cycles are yielded in canonical form (least vertex first, lesser
    direction). Doubled edges yield 2-cycles.
    """
    order = vsorted(g.vertices)
    rank = {v: i for i, v in enumerate(order)}
    if max_len >= 2:
        for u, v, m in g.edges():
            if m >= 2:
                yield canonical_cycle((u, v))
    for s in order:
        rs = rank[s]
        path = [s]
        on_path = {s}
        stack = [iter(vsorted(u for u in g.adj[s] if rank[u] > rs))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            # close the cycle back to s
            if len(path) >= 2 and s in g.adj[nxt] and len(path) + 1 <= max_len:
                if rank[path[1]] < rank[nxt]:
                    yield tuple(path + [nxt])
            if len(path) + 1 < max_len:
                path.append(nxt)
                on_path.add(nxt)
                stack.append(iter(vsorted(u for u in g.adj[nxt] if rank[u] > rs and u not in on_path)))
        # the outer loop re-seeds from each start vertex


def k_core(g: FiniteGraph, k: int) -> FiniteGraph:
    """Maximal subgraph of minimum degree >= k (possibly empty)."""
    deg = {v: g.degree(v) for v in g.vertices}
    alive = set(g.vertices)
    queue = deque(v for v in vsorted(alive) if deg[v] < k)
    while queue:
        v = queue.popleft()
        if v not in alive:
            continue
        alive.discard(v)
        for u, m in g.adj[v].items():
            if u in alive:
                deg[u] -= m
                if deg[u] < k:
                    queue.append(u)
    return g.subgraph(alive)
