"""Unit-capacity max-flow kernel with Menger certificates.

Vertices are visited in ``vkey`` order everywhere, so the augmenting paths,
and therefore the returned path systems and cuts, are reproducible.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .graph import FiniteGraph, GraphInputError, reachable, vkey, vsorted

_BIG = 1 << 30


class _Network:
    __slots__ = ("head", "cap", "out", "label")

    def __init__(self, n: int):
        self.head: list[int] = []
        self.cap: list[int] = []
        self.label: list = []
        self.out: list[list[int]] = [[] for _ in range(n)]

    def add(self, u: int, v: int, cap: int, back: int = 0, label=None) -> int:
        i = len(self.head)
        self.head += [v, u]
        self.cap += [cap, back]
        self.label += [label, label]
        self.out[u].append(i)
        self.out[v].append(i + 1)
        return i

    def maxflow(self, s: int, t: int, limit: int = _BIG) -> int:
        total = 0
        n = len(self.out)
        head, cap, out = self.head, self.cap, self.out
        while total < limit:
            pred = [-1] * n
            pred[s] = -2
            queue = deque([s])
            found = False
            while queue and not found:
                u = queue.popleft()
                for a in out[u]:
                    if cap[a] > 0:
                        v = head[a]
                        if pred[v] == -1:
                            pred[v] = a
                            if v == t:
                                found = True
                                break
                            queue.append(v)
            if not found:
                break
            push = limit - total
            v = t
            while v != s:
                a = pred[v]
                push = min(push, cap[a])
                v = head[a ^ 1]
            v = t
            while v != s:
                a = pred[v]
                cap[a] -= push
                cap[a ^ 1] += push
                v = head[a ^ 1]
            total += push
        return total

    def residual_reach(self, s: int) -> set[int]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for a in self.out[u]:
                if self.cap[a] > 0 and self.head[a] not in seen:
                    seen.add(self.head[a])
                    queue.append(self.head[a])
        return seen


@dataclass(frozen=True)
class VertexCut:
    """Separator plus the two sides it splits; re-checkable by one scan."""

    separator: frozenset
    side_a: frozenset
    side_b: frozenset

    def verify(self, g: FiniteGraph) -> bool:
        if self.separator & (self.side_a | self.side_b) or self.side_a & self.side_b:
            return False
        reach = reachable(g, self.side_a, blocked=self.separator)
        return not (reach & self.side_b)


@dataclass(frozen=True)
class EdgeCut:
    edges: tuple  # (u, v, multiplicity), u on side_a
    side_a: frozenset
    side_b: frozenset

    @property
    def size(self) -> int:
        return sum(m for _, _, m in self.edges)

    def verify(self, g: FiniteGraph) -> bool:
        if self.side_a & self.side_b:
            return False
        crossing = sum(m for v in self.side_a for u, m in g.adj[v].items() if u in self.side_b)
        return crossing == self.size and all(
            (u in self.side_a and v in self.side_b) for u, v, _ in self.edges
        )


@dataclass(frozen=True)
class CutResult:
    """``size`` = number of disjoint paths = size of the cut."""

    size: int
    cut: VertexCut | EdgeCut
    paths: tuple = field(default=())


@dataclass(frozen=True)
class Unseparable:
    """A source adjacent to a sink: no vertex set avoiding both separates them."""

    source: object
    sink: object


def _prep(g: FiniteGraph, sources, sinks) -> tuple[frozenset, frozenset]:
    s = g.check_vertices(sources)
    t = g.check_vertices(sinks)
    if not s or not t:
        raise GraphInputError("sources and sinks must be nonempty")
    if s & t:
        raise GraphInputError("sources and sinks must be disjoint")
    return s, t


def _walk_paths(net: _Network, start: int, stop: int, used: list[int]) -> list[list[int]]:
    """Decompose integral flow into arc sequences (flow is read from ``used``)."""
    paths = []
    while True:
        arcs, node, seen = [], start, {start: 0}
        ok = False
        while True:
            nxt = None
            for a in net.out[node]:
                if (a % 2 == 0 and used[a] > 0) or (a % 2 == 1 and used[a ^ 1] < 0):
                    nxt = a
                    break
            if nxt is None:
                break
            if nxt % 2 == 0:
                used[nxt] -= 1
            else:
                used[nxt ^ 1] += 1
            node = net.head[nxt]
            arcs.append(nxt)
            if node in seen:  # drop a flow cycle
                cut = seen[node]
                for a in arcs[cut:]:
                    seen.pop(net.head[a], None)
                arcs = arcs[:cut]
                seen[node] = cut
                continue
            seen[node] = len(arcs)
            if node == stop:
                ok = True
                break
        if not ok:
            return paths
        paths.append(arcs)


def min_vertex_cut(g: FiniteGraph, sources: Iterable, sinks: Iterable) -> CutResult | Unseparable:
    """Maximum internally disjoint source-to-sink paths and a minimum separator.

    The separator avoids ``sources`` and ``sinks``. If some source is adjacent
    to some sink no such separator exists and :class:`Unseparable` is returned.
    """
    s_set, t_set = _prep(g, sources, sinks)
    for s in vsorted(s_set):
        for u in vsorted(g.adj[s]):
            if u in t_set:
                return Unseparable(s, u)
    inner = [v for v in vsorted(g.vertices) if v not in s_set and v not in t_set]
    idx = {v: i for i, v in enumerate(inner)}
    S, T = 0, 1
    net = _Network(2 + 2 * len(inner))

    def vin(v):
        return S if v in s_set else T if v in t_set else 2 + 2 * idx[v]

    def vout(v):
        return S if v in s_set else T if v in t_set else 3 + 2 * idx[v]

    for v in inner:
        net.add(vin(v), vout(v), 1)
    for u in vsorted(g.vertices):
        if u in t_set:
            continue
        for v in vsorted(g.adj[u]):
            if v in s_set or (u in s_set and v in s_set):
                continue
            net.add(vout(u), vin(v), _BIG, label=(u, v))
    original = list(net.cap)
    value = net.maxflow(S, T)
    reach = net.residual_reach(S)
    separator = frozenset(v for v in inner if vin(v) in reach and vout(v) not in reach)
    side_a = frozenset(s_set | {v for v in inner if vout(v) in reach})
    side_b = frozenset(g.vertices - side_a - separator)
    used = [original[a] - net.cap[a] if a % 2 == 0 else 0 for a in range(len(net.cap))]
    paths = []
    for arcs in _walk_paths(net, S, T, used):
        labels = [net.label[a] for a in arcs if net.label[a] is not None]
        path = [labels[0][0]] + [lab[1] for lab in labels]
        paths.append(tuple(path))
    paths.sort(key=lambda p: [vkey(x) for x in p])
    return CutResult(value, VertexCut(separator, side_a, side_b), tuple(paths))


def min_edge_cut(g: FiniteGraph, sources: Iterable, sinks: Iterable) -> CutResult:
    """Maximum edge-disjoint source-to-sink paths (multiplicities count)."""
    s_set, t_set = _prep(g, sources, sinks)
    inner = [v for v in vsorted(g.vertices) if v not in s_set and v not in t_set]
    idx = {v: 2 + i for i, v in enumerate(inner)}
    S, T = 0, 1

    def node(v):
        return S if v in s_set else T if v in t_set else idx[v]

    net = _Network(2 + len(inner))
    for u, v, m in g.edges():
        a, b = node(u), node(v)
        if a == b:
            continue
        net.add(a, b, m, back=m, label=(u, v))
    original = list(net.cap)
    value = net.maxflow(S, T)
    reach = net.residual_reach(S)
    side_a = frozenset(s_set | {v for v in inner if idx[v] in reach})
    side_b = frozenset(g.vertices - side_a)
    cut_edges = []
    for u in vsorted(side_a):
        for v in vsorted(g.adj[u]):
            if v in side_b:
                cut_edges.append((u, v, g.adj[u][v]))
    used = [original[a] - net.cap[a] if a % 2 == 0 else 0 for a in range(len(net.cap))]
    paths = []
    for arcs in _walk_paths(net, S, T, used):
        path = []
        for a in arcs:
            u, v = net.label[a]
            x, y = (u, v) if a % 2 == 0 else (v, u)
            if not path:
                path.append(x)
            path.append(y)
        paths.append(tuple(path))
    paths.sort(key=lambda p: [vkey(x) for x in p])
    return CutResult(value, EdgeCut(tuple(cut_edges), side_a, side_b), tuple(paths))


def set_disjoint_paths(
    g: FiniteGraph, a: Iterable, b: Iterable, limit: int = _BIG
) -> CutResult:
    """Menger for vertex sets: disjoint A--B paths (endpoints included).

    The separator may contain vertices of ``a`` or ``b``. Each returned path
    meets ``a`` only in its first and ``b`` only in its last vertex.
    """
    a_set = g.check_vertices(a)
    b_set = g.check_vertices(b)
    order = vsorted(g.vertices)
    idx = {v: i for i, v in enumerate(order)}
    S, T = 0, 1
    net = _Network(2 + 2 * len(order))

    def vin(v):
        return 2 + 2 * idx[v]

    def vout(v):
        return 3 + 2 * idx[v]

    for v in order:
        net.add(vin(v), vout(v), 1, label=("v", v))
    for v in order:
        if v in a_set:
            net.add(S, vin(v), _BIG)
        if v in b_set:
            net.add(vout(v), T, _BIG)
    for u in order:
        for v in vsorted(g.adj[u]):
            net.add(vout(u), vin(v), _BIG, label=("e", u, v))
    original = list(net.cap)
    value = net.maxflow(S, T, limit)
    reach = net.residual_reach(S)
    separator = frozenset(v for v in order if vin(v) in reach and vout(v) not in reach)
    side_a = frozenset(v for v in order if vout(v) in reach)
    side_b = frozenset(g.vertices - side_a - separator)
    used = [original[x] - net.cap[x] if x % 2 == 0 else 0 for x in range(len(net.cap))]
    paths = []
    for arcs in _walk_paths(net, S, T, used):
        walk = [net.label[x][1] for x in arcs if net.label[x] is not None and net.label[x][0] == "v"]
        last_a = max(i for i, v in enumerate(walk) if v in a_set)
        walk = walk[last_a:]
        first_b = min(i for i, v in enumerate(walk) if v in b_set)
        paths.append(tuple(walk[: first_b + 1]))
    paths.sort(key=lambda p: [vkey(x) for x in p])
    return CutResult(value, VertexCut(separator, side_a, side_b), tuple(paths))


def paths_vertex_disjoint(paths: Iterable, internal_only: bool = False) -> bool:
    seen: set = set()
    for p in paths:
        body = p[1:-1] if internal_only else p
        for v in body:
            if v in seen:
                return False
            seen.add(v)
    return True


def paths_edge_disjoint(g: FiniteGraph, paths: Iterable) -> bool:
    from collections import Counter

    use: Counter = Counter()
    for p in paths:
        for u, v in zip(p, p[1:]):
            use[frozenset((u, v))] += 1
    return all(g.multiplicity(*tuple(e)) >= c for e, c in use.items())
