"""Bounded search for complete minors K^r.

In a connected graph a K^r minor exists iff V can be partitioned into r
connected, pairwise adjacent parts (left-over vertices can always be absorbed
into a neighbouring part). The search therefore only contracts edges or
forbids them from being contracted; it never deletes.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graph import FiniteGraph, GraphInputError, components, is_connected, vkey, vsorted


@dataclass(frozen=True)
class MinorResult:
    status: str  # "found" | "none" | "exhausted"
    r: int
    branch_sets: tuple = ()
    nodes: int = 0

    @property
    def found(self) -> bool:
        return self.status == "found"


def verify_branch_sets(g: FiniteGraph, branch_sets) -> bool:
    """Disjoint, nonempty, connected and pairwise adjacent."""
    sets = [frozenset(b) for b in branch_sets]
    seen: set = set()
    for b in sets:
        if not b or b & seen or not b <= g.vertices:
            return False
        seen |= b
        if not is_connected(g, within=b):
            return False
    for a, b in combinations(sets, 2):
        if not any(u in b for v in a for u in g.adj[v]):
            return False
    return True


class _Budget(Exception):
    pass


class _Search:
    def __init__(self, r: int, budget: int):
        self.r = r
        self.budget = budget
        self.nodes = 0

    def run(self, parts: list, adj: list) -> tuple | None:
        alive = frozenset(range(len(parts)))
        return self._go(parts, [set(a) for a in adj], alive, frozenset())

    def _clique(self, adj, alive) -> tuple | None:
        r = self.r
        cand = sorted(v for v in alive if len(adj[v]) >= r - 1)

        def extend(chosen, pool):
            if len(chosen) == r:
                return chosen
            for i, v in enumerate(pool):
                nxt = [u for u in pool[i + 1 :] if u in adj[v]]
                if len(chosen) + 1 + len(nxt) < r:
                    continue
                got = extend(chosen + [v], nxt)
                if got:
                    return got
            return None

        return extend([], cand)

    def _go(self, parts, adj, alive, forbid):
        self.nodes += 1
        if self.nodes > self.budget:
            raise _Budget
        r = self.r
        if len(alive) < r:
            return None
        m = sum(len(adj[v]) for v in alive) // 2
        if m < r * (r - 1) // 2:
            return None
        clique = self._clique(adj, alive)
        if clique:
            return tuple(parts[v] for v in clique)
        if len(alive) == r:
            return None
        # a part with too few neighbours must be merged into one of them
        low = min(alive, key=lambda v: (len(adj[v]), vkey(min(parts[v], key=vkey))))
        if len(adj[low]) < r - 1:
            options = sorted(u for u in adj[low] if frozenset((low, u)) not in forbid)
            extra = set()
            for u in options:
                got = self._contract(parts, adj, alive, forbid | extra, low, u)
                if got:
                    return got
                extra.add(frozenset((low, u)))
            return None
        for v in sorted(alive, key=lambda x: len(adj[x])):
            for u in sorted(adj[v]):
                e = frozenset((v, u))
                if e in forbid:
                    continue
                got = self._contract(parts, adj, alive, forbid, v, u)
                if got:
                    return got
                return self._go(parts, adj, alive, forbid | {e})
        return None

    def _contract(self, parts, adj, alive, forbid, keep, gone):
        parts = list(parts)
        parts[keep] = parts[keep] | parts[gone]
        adj = list(adj)
        merged = (adj[keep] | adj[gone]) - {keep, gone}
        adj[keep] = merged
        adj[gone] = set()
        for w in merged:
            s = set(adj[w])
            s.discard(gone)
            s.add(keep)
            adj[w] = s
        new_forbid = set()
        for e in forbid:
            if gone in e:
                other = next(iter(e - {gone}))
                if other == keep:
                    continue
                e = frozenset((keep, other))
            new_forbid.add(e)
        return self._go(parts, adj, alive - {gone}, frozenset(new_forbid))


def _reduce(g: FiniteGraph, r: int) -> tuple[list, list]:
    """Simple graph on parts after safe low-degree reductions.

    Degree <= 1 vertices are deleted (r >= 3) and degree-2 vertices are
    contracted into a neighbour (r >= 4); neither changes whether K^r is a minor.
    """
    parts = {v: frozenset([v]) for v in g.vertices}
    adj = {v: set(g.adj[v]) for v in g.vertices}
    changed = True
    while changed:
        changed = False
        for v in vsorted(adj):
            if v not in adj:
                continue
            d = len(adj[v])
            if r >= 3 and d <= 1:
                for u in adj[v]:
                    adj[u].discard(v)
                del adj[v], parts[v]
                changed = True
            elif r >= 4 and d == 2:
                y = min(adj[v], key=vkey)
                z = next(iter(adj[v] - {y}))
                parts[y] = parts[y] | parts[v]
                adj[y].discard(v)
                adj[z].discard(v)
                adj[y].add(z)
                adj[z].add(y)
                del adj[v], parts[v]
                changed = True
    order = vsorted(adj)
    idx = {v: i for i, v in enumerate(order)}
    return [parts[v] for v in order], [{idx[u] for u in adj[v]} for v in order]


def complete_minor(g: FiniteGraph, r: int, budget: int = 200_000) -> MinorResult:
    """Find a K^r minor, prove there is none, or give up after ``budget`` nodes."""
    if r < 1:
        raise GraphInputError("r must be >= 1")
    if r == 1:
        if len(g) == 0:
            return MinorResult("none", r)
        return MinorResult("found", r, (frozenset([min(g.vertices, key=vkey)]),))
    nodes = 0
    exhausted = False
    for comp in components(g):
        if len(comp) < r:
            continue
        parts, adj = _reduce(g.subgraph(comp), r)
        search = _Search(r, budget - nodes)
        try:
            got = search.run(parts, adj)
        except _Budget:
            exhausted = True
            nodes += search.nodes
            continue
        nodes += search.nodes
        if got:
            sets = tuple(sorted(got, key=lambda b: vkey(min(b, key=vkey))))
            return MinorResult("found", r, sets, nodes)
    return MinorResult("exhausted" if exhausted else "none", r, (), nodes)
