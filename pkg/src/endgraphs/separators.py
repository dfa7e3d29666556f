"""Inclusion-minimal separators between two vertex sets of a finite graph.

Both sets are contracted to single terminals. Starting from the separator
closest to ``a``, every minimal a-b separator is reached by the
close-separator step: put one separator vertex x on a's side, take the
component D of b in G - N[C_a(S) + x] and use N(D).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .graph import FiniteGraph, GraphInputError, vkey, vsorted

_A = ("__a__",)
_B = ("__b__",)


def _contracted(g: FiniteGraph, a: frozenset, b: frozenset) -> dict:
    adj = {}
    for v in g.vertices:
        if v in a or v in b:
            continue
        nb = set()
        for u in g.adj[v]:
            nb.add(_A if u in a else _B if u in b else u)
        adj[v] = nb
    adj[_A] = {(_B if u in b else u) for v in a for u in g.adj[v] if u not in a}
    adj[_B] = {(_A if u in a else u) for v in b for u in g.adj[v] if u not in b}
    return adj


def _reach(adj: dict, start, blocked) -> set:
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in seen and u not in blocked:
                seen.add(u)
                queue.append(u)
    return seen


def _close(adj: dict, c: set) -> frozenset:
    """N(D) where D is b's component in G - N[c]."""
    closed = set(c)
    for v in c:
        closed |= adj[v]
    d = _reach(adj, _B, closed)
    return frozenset(u for v in d for u in adj[v] if u not in d)


def _skey(s: frozenset) -> tuple:
    return (len(s), [vkey(v) for v in vsorted(s)])


@dataclass
class SeparatorSearch:
    """Result of a bounded enumeration; ``complete`` is false if cut short."""

    separators: list
    complete: bool
    visited: int


def _prepare(g: FiniteGraph, a: Iterable, b: Iterable):
    a = g.check_vertices(a)
    b = g.check_vertices(b)
    if not a or not b:
        raise GraphInputError("a and b must be nonempty")
    if a & b:
        raise GraphInputError("a and b must be disjoint")
    return a, b


def enumerate_minimal_separators(
    g: FiniteGraph, a: Iterable, b: Iterable, size_cap: int | None = None, limit: int | None = None
) -> Iterator[frozenset]:
    """Yield every inclusion-minimal a-b separator of size <= size_cap.

    Separators avoid a and b. Order is breadth-first from a, deterministic.
    ``limit`` bounds the number of separators generated (including those
    over the cap, which are still expanded).
    """
    yield from _walk(g, a, b, size_cap, limit, None)


def _walk(g, a, b, size_cap, limit, stats):
    a, b = _prepare(g, a, b)
    adj = _contracted(g, a, b)
    if _B in adj[_A]:
        if stats is not None:
            stats["complete"] = True
        return
    start = _close(adj, {_A})
    if not start:  # a and b already disconnected: only the empty separator
        if stats is not None:
            stats["complete"] = True
            stats["visited"] = 1
        yield start
        return
    seen = {start}
    queue = deque([start])
    visited = 0
    complete = True
    while queue:
        s = queue.popleft()
        visited += 1
        if stats is not None:
            stats["visited"] = visited
        if size_cap is None or len(s) <= size_cap:
            yield s
        if limit is not None and len(seen) >= limit:
            complete = complete and not queue and all(_B in adj[x] for x in s)
            continue
        side = _reach(adj, _A, s)
        nxt = []
        for x in vsorted(s):
            if _B in adj[x]:
                continue
            if limit is not None and len(seen) >= limit:
                complete = False
                break
            t = _close(adj, side | {x})
            if t and t not in seen:
                seen.add(t)
                nxt.append(t)
        nxt.sort(key=_skey)
        queue.extend(nxt)
    if stats is not None:
        stats["complete"] = complete


def minimal_separators(
    g: FiniteGraph, a: Iterable, b: Iterable, size_cap: int | None = None, limit: int | None = None
) -> SeparatorSearch:
    stats = {"complete": True, "visited": 0}
    seps = list(_walk(g, a, b, size_cap, limit, stats))
    return SeparatorSearch(seps, stats["complete"], stats["visited"])


def separates(g: FiniteGraph, a: Iterable, b: Iterable, s: Iterable) -> bool:
    a, b, s = frozenset(a), frozenset(b), frozenset(s)
    if s & (a | b):
        return False
    seen = set(a)
    queue = deque(a)
    while queue:
        v = queue.popleft()
        if v in b:
            return False
        for u in g.adj[v]:
            if u not in seen and u not in s:
                seen.add(u)
                queue.append(u)
    return True


def is_minimal_separator(g: FiniteGraph, a: Iterable, b: Iterable, s: Iterable) -> bool:
    """Separates, and no single-vertex deletion still separates."""
    s = frozenset(s)
    if not separates(g, a, b, s):
        return False
    return all(not separates(g, a, b, s - {x}) for x in s)


def brute_force_minimal_separators(g: FiniteGraph, a: Iterable, b: Iterable, size_cap: int) -> set:
    """Subset enumeration; the oracle for small graphs."""
    a, b = _prepare(g, a, b)
    pool = vsorted(g.vertices - a - b)
    out = set()
    for n in range(0, size_cap + 1):
        for combo in combinations(pool, n):
            if is_minimal_separator(g, a, b, combo):
                out.add(frozenset(combo))
    return out
