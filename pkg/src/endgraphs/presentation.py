"""Lazy presentations of countable graphs, balls, and end handles.

A presentation is a root, a neighbour oracle and a level grading with finite
level sets. Every family registered here grades its vertices so that levels
change by at most one along an edge (checked while extracting balls) and so
that every ball is connected. That makes the following cheap:

* the neighbours of the ball ``B_r`` outside it all have level ``r + 1``;
* a component of ``G - X`` that does not reach level
  ``maxlevel(X) + escape_margin + 1`` is seen completely inside that window,
  so declaring it finite is exact;
* a component that does reach the window top is declared infinite. The
  constructor of each family documents why its margin makes this sound,
  and why window components that meet the top are distinct components of
  ``G - X``.

Vertex ids are canonical strings encoding the construction path.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .graph import FiniteGraph, GraphInputError, vkey, vsorted


class PresentationError(RuntimeError):
    """The oracle contradicts its own contract (asymmetry, level jumps ...)."""


class UndecidedComponent(PresentationError):
    """Strict re-check of the escape rule disagreed with the plain rule."""


@dataclass(eq=False)
class Presentation:
    name: str
    params: dict
    roots: tuple
    neighbors: Callable[[str], Iterable]
    level: Callable[[str], int]
    escape_margin: int = 1
    locally_finite: bool = True
    upto: Callable | None = None  # (v, r) -> neighbours of level <= r
    finite: bool = False
    note: str = ""
    _nb_cache: dict = field(default_factory=dict, repr=False)
    _lv_cache: dict = field(default_factory=dict, repr=False)

    @property
    def root(self):
        return self.roots[0]

    def lvl(self, v) -> int:
        c = self._lv_cache.get(v)
        if c is None:
            c = self.level(v)
            if c < 0:
                raise PresentationError(f"negative level at {v!r}")
            self._lv_cache[v] = c
        return c

    def nbrs(self, v) -> list:
        """Full neighbour list (with repeats for parallel edges)."""
        if not self.locally_finite:
            raise PresentationError(f"{self.name}: vertex {v!r} may have infinite degree")
        c = self._nb_cache.get(v)
        if c is None:
            c = list(self.neighbors(v))
            self._nb_cache[v] = c
        return c

    def neighbors_upto(self, v, r: int) -> list:
        if self.upto is not None:
            return list(self.upto(v, r))
        return [u for u in self.nbrs(v) if self.lvl(u) <= r]

    def has_neighbor_above(self, v, r: int) -> bool:
        if self.locally_finite:
            return any(self.lvl(u) > r for u in self.nbrs(v))
        return len(self.neighbors_upto(v, r + 1)) > len(self.neighbors_upto(v, r))

    def lipschitz(self) -> bool:
        return self.locally_finite

    def describe(self) -> dict:
        return {"name": self.name, "params": dict(self.params)}


@dataclass(frozen=True)
class Ball:
    graph: FiniteGraph
    radius: int
    frontier: frozenset
    levels: dict

    def __len__(self) -> int:
        return len(self.graph)


def _check_edge(p: Presentation, v, u) -> None:
    if p.lipschitz() and abs(p.lvl(u) - p.lvl(v)) > 1:
        raise PresentationError(f"{p.name}: edge {v!r}-{u!r} jumps levels {p.lvl(v)} -> {p.lvl(u)}")


def ball(p: Presentation, r: int, check: bool = True) -> Ball:
    """Induced subgraph on all vertices of level <= r, frontier marked."""
    if r < 0:
        raise GraphInputError("radius must be >= 0")
    for root in p.roots:
        if p.lvl(root) != 0:
            raise PresentationError(f"root {root!r} has level {p.lvl(root)}")
    seen = set(p.roots)
    queue = deque(vsorted(p.roots))
    adj_lists: dict = {}
    while queue:
        v = queue.popleft()
        nb = p.neighbors_upto(v, r)
        adj_lists[v] = nb
        for u in nb:
            if check:
                _check_edge(p, v, u)
            if u == v:
                raise PresentationError(f"{p.name}: loop at {v!r}")
            if u not in seen:
                seen.add(u)
                queue.append(u)
    edges = []
    for v, nb in adj_lists.items():
        counts: dict = {}
        for u in nb:
            counts[u] = counts.get(u, 0) + 1
        for u, m in counts.items():
            if check:
                back = sum(1 for w in adj_lists[u] if w == v)
                if back != m:
                    raise PresentationError(f"{p.name}: asymmetric oracle at {v!r}-{u!r} ({m} vs {back})")
            if vkey(v) < vkey(u):
                edges.append((v, u, m))
    g = FiniteGraph(seen, edges)
    frontier = frozenset(v for v in seen if p.has_neighbor_above(v, r))
    return Ball(g, r, frontier, {v: p.lvl(v) for v in seen})


def window_graph(p: Presentation, vertices: Iterable) -> FiniteGraph:
    """Induced subgraph of the presentation on a finite vertex set."""
    vs = frozenset(vertices)
    edges = []
    top = max((p.lvl(v) for v in vs), default=0)
    for v in vs:
        counts: dict = {}
        for u in p.neighbors_upto(v, top) if not p.locally_finite else p.nbrs(v):
            if u in vs:
                counts[u] = counts.get(u, 0) + 1
        for u, m in counts.items():
            if vkey(v) < vkey(u):
                edges.append((v, u, m))
    return FiniteGraph(vs, edges)


def explore(p: Presentation, seeds: Iterable, blocked, top: int) -> set:
    """Vertices reachable from ``seeds`` avoiding ``blocked`` with level <= top.

    ``blocked`` is a set or a predicate.
    """
    is_blocked = blocked if callable(blocked) else blocked.__contains__
    seen = {s for s in seeds if not is_blocked(s) and p.lvl(s) <= top}
    queue = deque(vsorted(seen))
    while queue:
        v = queue.popleft()
        for u in p.neighbors_upto(v, top):
            if u not in seen and not is_blocked(u):
                seen.add(u)
                queue.append(u)
    return seen


@dataclass(frozen=True)
class Component:
    """One component of ``G - X`` as seen inside the level window ``<= top``."""

    rep: str
    seeds: frozenset  # vertices adjacent to X
    attachment: frozenset  # vertices of X adjacent to the component
    window: frozenset
    infinite: bool
    top: int

    def describe(self) -> dict:
        return {
            "rep": self.rep,
            "attachment": vsorted(self.attachment),
            "seeds": len(self.seeds),
            "infinite": self.infinite,
        }


def _split(p: Presentation, blocked, seeds: Iterable, top: int, limit_level: int) -> list[Component]:
    is_blocked = blocked if callable(blocked) else blocked.__contains__
    remaining = set(seeds)
    comps = []
    while remaining:
        s = min(remaining, key=vkey)
        win = explore(p, [s], is_blocked, top)
        comp_seeds = frozenset(remaining & win)
        remaining -= win
        attach = set()
        for v in comp_seeds:
            for u in p.neighbors_upto(v, p.lvl(v)):
                if is_blocked(u):
                    attach.add(u)
        infinite = any(p.lvl(v) > limit_level for v in win)
        rep = min(comp_seeds, key=lambda v: (p.lvl(v), vkey(v)))
        comps.append(Component(rep, comp_seeds, frozenset(attach), frozenset(win), infinite, top))
    comps.sort(key=lambda c: vkey(c.rep))
    return comps


def components_outside(p: Presentation, x: Iterable, strict: bool = False) -> list[Component]:
    """Components of ``G - X`` for a finite vertex set ``X`` (escape rule).

    With ``strict`` the split is recomputed in a window twice as deep and any
    disagreement raises :class:`UndecidedComponent`.
    """
    if not p.locally_finite:
        raise GraphInputError(f"{p.name}: components need a locally finite presentation")
    x = frozenset(x)
    if not x:
        raise GraphInputError("X must be nonempty")
    top_x = max(p.lvl(v) for v in x)
    seeds = {u for v in x for u in p.nbrs(v) if u not in x}
    limit = top_x + p.escape_margin
    comps = _split(p, x, seeds, limit + 1, limit)
    if strict:
        deep = _split(p, x, seeds, top_x + 2 * p.escape_margin + 1, limit)
        a = sorted((vsorted(c.seeds), c.infinite) for c in comps)
        b = sorted((vsorted(c.seeds), c.infinite) for c in deep)
        if a != b:
            raise UndecidedComponent(f"{p.name}: escape rule unstable around {vsorted(x)[:5]}...")
    return comps


def _in_ball(p: Presentation, r: int):
    return lambda v: p.lvl(v) <= r


def _ball_seeds(p: Presentation, r: int) -> set:
    b = ball(p, r, check=False)
    return {u for v in b.frontier for u in p.nbrs(v) if p.lvl(u) == r + 1}


def end_components(p: Presentation, r: int, strict: bool = False, include_finite: bool = False) -> list[Component]:
    """Infinite components of ``G - B_r`` (escape rule)."""
    if not p.locally_finite:
        raise GraphInputError(f"{p.name}: end components need a locally finite presentation")
    seeds = _ball_seeds(p, r)
    limit = r + p.escape_margin
    comps = _split(p, _in_ball(p, r), seeds, limit + 1, limit)
    if strict:
        deep = _split(p, _in_ball(p, r), seeds, r + 2 * p.escape_margin + 1, limit)
        a = sorted((vsorted(c.seeds), c.infinite) for c in comps)
        b = sorted((vsorted(c.seeds), c.infinite) for c in deep)
        if a != b:
            raise UndecidedComponent(f"{p.name}: escape rule unstable at radius {r}")
    return comps if include_finite else [c for c in comps if c.infinite]


@dataclass(frozen=True)
class EndHandle:
    """Nested infinite components ``(radius, representative)``, radii increasing."""

    chain: tuple

    @property
    def radius(self) -> int:
        return self.chain[-1][0]

    @property
    def rep(self) -> str:
        return self.chain[-1][1]

    def rep_at(self, r: int) -> str:
        for rad, rep in self.chain:
            if rad == r:
                return rep
        raise KeyError(r)

    def to_spec(self) -> str:
        return ";".join(f"{r}@{rep}" for r, rep in self.chain)

    @classmethod
    def from_spec(cls, spec: str) -> "EndHandle":
        chain = []
        for part in spec.split(";"):
            r, _, rep = part.partition("@")
            if not rep:
                raise GraphInputError(f"bad handle entry {part!r}, expected radius@vertex")
            chain.append((int(r), rep))
        return cls(tuple(chain))


def component_of(p: Presentation, r: int, rep, top: int) -> frozenset:
    """Window (levels <= top) of the component of ``G - B_r`` containing ``rep``."""
    if p.lvl(rep) <= r:
        raise GraphInputError(f"{rep!r} lies inside the ball of radius {r}")
    return frozenset(explore(p, [rep], _in_ball(p, r), top))


def handles(p: Presentation, r: int) -> list[EndHandle]:
    return [EndHandle(((r, c.rep),)) for c in end_components(p, r)]


def refine(p: Presentation, h: EndHandle, r2: int) -> list[EndHandle]:
    """All infinite components at radius ``r2`` inside the handle's last one."""
    r1, rep = h.chain[-1]
    if r2 <= r1:
        raise GraphInputError("refine needs a larger radius")
    top = r2 + p.escape_margin + 1
    region = component_of(p, r1, rep, top)
    seeds = {v for v in region if p.lvl(v) == r2 + 1}
    limit = r2 + p.escape_margin
    comps = _split(p, _in_ball(p, r2), seeds, top, limit)
    return [EndHandle(h.chain + ((r2, c.rep),)) for c in comps if c.infinite]


def extend(p: Presentation, h: EndHandle, r: int) -> EndHandle:
    """Extend radius by radius, always taking the least refinement."""
    while h.radius < r:
        kids = refine(p, h, h.radius + 1)
        if not kids:
            raise GraphInputError(f"handle {h.to_spec()} has no infinite refinement at {h.radius + 1}")
        h = kids[0]
    return h


def check_handle(p: Presentation, h: EndHandle) -> bool:
    """Each entry lies in the previous component and passes the escape rule."""
    for (r1, a), (r2, b) in zip(h.chain, h.chain[1:]):
        if r2 <= r1:
            return False
        top = r2 + p.escape_margin + 1
        if b not in component_of(p, r1, a, top):
            return False
    for r, rep in h.chain:
        comp = component_of(p, r, rep, r + p.escape_margin + 1)
        if not any(p.lvl(v) > r + p.escape_margin for v in comp):
            return False
    return True


def default_handle(p: Presentation, r: int = 1, index: int = 0) -> EndHandle:
    hs = handles(p, r)
    if not hs:
        raise GraphInputError(f"{p.name}: no infinite component at radius {r}")
    if not 0 <= index < len(hs):
        raise GraphInputError(f"{p.name}: only {len(hs)} ends at radius {r}")
    return hs[index]


@dataclass(frozen=True)
class RegionView:
    """The handle's component at ``radius`` with its boundaries.

    ``window`` lists the region's vertices up to level ``top``; the region
    itself is infinite. ``boundary_v`` lies inside the region.
    """

    radius: int
    rep: str
    window: frozenset
    top: int
    boundary_v: frozenset
    boundary_e: tuple

    @property
    def edge_boundary_size(self) -> int:
        return sum(m for *_, m in self.boundary_e)


def region_of(p: Presentation, h: EndHandle, r: int) -> RegionView:
    if r > h.radius:
        h = extend(p, h, r)
    try:
        rep = h.rep_at(r)
    except KeyError:
        # a radius skipped by the chain: find the component holding a deeper rep
        deeper = [(rad, x) for rad, x in h.chain if rad > r]
        if not deeper:
            raise GraphInputError(f"handle has no entry at or beyond radius {r}")
        rep = deeper[0][1]
    top = r + p.escape_margin + 1
    win = component_of(p, r, rep, max(top, p.lvl(rep)))
    bv = set()
    be = []
    for v in vsorted(win):
        if p.lvl(v) != r + 1:
            continue
        counts: dict = {}
        for u in p.nbrs(v):
            if p.lvl(u) <= r:
                counts[u] = counts.get(u, 0) + 1
        if counts:
            bv.add(v)
            for u in vsorted(counts):
                be.append((v, u, counts[u]))
    return RegionView(r, rep, win, top, frozenset(bv), tuple(be))


def finite_presentation(g: FiniteGraph, root=None, name: str = "finite") -> Presentation:
    """Wrap a connected finite graph; levels are BFS distances from ``root``."""
    from .graph import bfs_distances

    if len(g) == 0:
        raise GraphInputError("empty graph")
    root = vsorted(g.vertices)[0] if root is None else root
    dist = bfs_distances(g, [root])
    if len(dist) != len(g):
        raise GraphInputError("finite presentation needs a connected graph")
    sid = {v: str(v) for v in g.vertices}
    back = {s: v for v, s in sid.items()}
    if len(back) != len(sid):
        raise GraphInputError("vertex ids collide after conversion to strings")
    nbrs = {sid[v]: [sid[u] for u, m in g.adj[v].items() for _ in range(m)] for v in g.vertices}
    levels = {sid[v]: d for v, d in dist.items()}
    return Presentation(
        name=name,
        params={"n": len(g)},
        roots=(sid[root],),
        neighbors=lambda v: nbrs[v],
        level=lambda v: levels[v],
        escape_margin=len(g) + 1,
        finite=True,
        note="finite graph; no component is ever declared infinite",
    )
