"""Canonical forms and exhaustive generation of small simple graphs.

Graphs are handled as tuples of adjacency bitmasks. Canonical labelling is by
individualization-refinement with pruning by discovered automorphisms; at
n <= 8 this is fast enough to generate every graph by vertex extension.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .graph import FiniteGraph


def _refine(adj: tuple, cells: list) -> list:
    """Coarsest equitable refinement of an ordered partition (invariant order)."""
    while True:
        where = {}
        for ci, cell in enumerate(cells):
            for v in cell:
                where[v] = ci
        masks = []
        for cell in cells:
            m = 0
            for v in cell:
                m |= 1 << v
            masks.append(m)
        new = []
        for ci, cell in enumerate(cells):
            if len(cell) == 1:
                new.append(cell)
                continue
            sig = {}
            for v in cell:
                key = tuple(bin(adj[v] & m).count("1") for m in masks)
                sig.setdefault(key, []).append(v)
            for key in sorted(sig):
                new.append(sig[key])
        if len(new) == len(cells):
            return new
        cells = new


def _code(adj: tuple, lab: list) -> int:
    n = len(lab)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    code = 0
    for i in range(n):
        a = adj[lab[i]]
        row = 0
        for j in range(i + 1, n):
            if a >> lab[j] & 1:
                row |= 1 << (n - 1 - j)
        code = (code << n) | row
    return code


def canonical_labeling(n: int, adj: tuple) -> tuple[int, list]:
    """Return (code, lab) with lab[i] = vertex placed at position i."""
    if n == 0:
        return 0, []
    best = [None, None]
    leaves: dict[int, list] = {}
    autos: list[list] = []

    def orbits_fixing(seq):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in autos:
            if all(g[v] == v for v in seq):
                for v in range(n):
                    a, b = find(v), find(g[v])
                    if a != b:
                        parent[a] = b
        return find

    def search(cells, seq):
        if len(cells) == n:
            lab = [c[0] for c in cells]
            code = _code(adj, lab)
            if code in leaves:
                other = leaves[code]
                # other[i] -> lab[i] maps one labelling onto the other
                g = [0] * n
                for a, b in zip(other, lab):
                    g[a] = b
                autos.append(g)
            else:
                leaves[code] = lab
            if best[0] is None or code > best[0]:
                best[0], best[1] = code, lab
            return
        ti = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[ti]
        done: list = []
        for v in sorted(target):
            if done:
                find = orbits_fixing(seq)
                if any(find(v) == find(u) for u in done):
                    continue
            done.append(v)
            rest = [u for u in target if u != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1 :]
            search(_refine(adj, child), seq + [v])

    start = _refine(adj, [list(range(n))])
    search(start, [])
    return best[0], best[1]


def canonical_form(n: int, adj: tuple) -> tuple:
    code, lab = canonical_labeling(n, adj)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    out = [0] * n
    for v in range(n):
        m = 0
        a = adj[v]
        for u in range(n):
            if a >> u & 1:
                m |= 1 << pos[u]
        out[pos[v]] = m
    return tuple(out)


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple:
    """Every simple graph on n vertices up to isomorphism (canonical masks)."""
    if n == 0:
        return ((),)
    out = set()
    for g in all_graphs(n - 1):
        for nb in range(1 << (n - 1)):
            adj = list(g) + [nb]
            for u in range(n - 1):
                if nb >> u & 1:
                    adj[u] |= 1 << (n - 1)
            out.add(canonical_form(n, tuple(adj)))
    return tuple(sorted(out))


def mask_connected(n: int, adj: tuple) -> bool:
    if n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        v = 0
        f = frontier
        while f:
            if f & 1:
                nxt |= adj[v]
            f >>= 1
            v += 1
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << n) - 1


def connected_graphs(n: int) -> tuple:
    return tuple(g for g in all_graphs(n) if mask_connected(n, g))


def to_finite_graph(adj: tuple) -> FiniteGraph:
    n = len(adj)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1]
    return FiniteGraph(range(n), edges)


def iter_connected(max_n: int, min_n: int = 1) -> Iterator[FiniteGraph]:
    for n in range(min_n, max_n + 1):
        for g in connected_graphs(n):
            yield to_finite_graph(g)
