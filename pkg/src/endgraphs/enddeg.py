"""Interval estimates of end degrees at a finite radius budget.

All four estimators work in the level window of the handle's components.

* vertex / edge degree: for a few base radii i below the budget, the number
  of disjoint paths from the attachment of the handle component C_i to the
  rim of C_R (R = budget), with a matching separator or cut. The lower bound
  is the largest packing; an upper bound is only claimed once the last two
  bases agree with it.
* relative degree: greedy chains of regions whose boundaries are
  inclusion-minimal separators, enumerated layer by layer.
* ratio: interval division of the edge and vertex estimates.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .flow import min_edge_cut, paths_edge_disjoint, paths_vertex_disjoint, set_disjoint_paths
from .graph import FiniteGraph, GraphInputError, components, vkey, vsorted
from .presentation import (
    EndHandle,
    Presentation,
    check_handle,
    component_of,
    extend,
    window_graph,
)
from .separators import is_minimal_separator, minimal_separators

UNBOUNDED = "unbounded"


def _q(x) -> str:
    return str(x) if not isinstance(x, Fraction) else (str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}")


@dataclass(frozen=True)
class RaySystemCert:
    """Disjoint paths from the base attachment to the rim of the deep component."""

    kind: str  # vertex | edge
    base_radius: int
    radius: int
    paths: tuple

    def verify(self, p: Presentation, h: EndHandle) -> bool:
        g, a, t = probe_graph(p, h, self.base_radius, self.radius)
        for path in self.paths:
            if path[0] not in a or path[-1] not in t:
                return False
            if any(u not in g.adj[v] for v, u in zip(path, path[1:])):
                return False
        if self.kind == "vertex":
            return paths_vertex_disjoint(self.paths)
        return paths_edge_disjoint(g, self.paths)

    def to_json(self) -> dict:
        return {"kind": self.kind, "base_radius": self.base_radius, "radius": self.radius,
                "paths": [list(p) for p in self.paths]}


@dataclass(frozen=True)
class SeparatorCert:
    """A vertex set (or edge list) separating the base ball from the deep component."""

    kind: str
    base_radius: int
    radius: int
    separator: tuple

    @property
    def size(self) -> int:
        if self.kind == "vertex":
            return len(self.separator)
        return sum(m for *_, m in self.separator)

    def verify(self, p: Presentation, h: EndHandle) -> bool:
        from collections import deque

        g, a, t = probe_graph(p, h, self.base_radius, self.radius)
        if self.kind == "vertex":
            blocked = set(self.separator)
            cut = set()
        else:
            blocked = set()
            cut = {frozenset((u, v)) for u, v, _ in self.separator}
        seen = {v for v in a if v not in blocked}
        queue = deque(seen)
        while queue:
            v = queue.popleft()
            if v in t:
                return False
            for u in g.adj[v]:
                if u in seen or u in blocked or frozenset((u, v)) in cut:
                    continue
                seen.add(u)
                queue.append(u)
        return True

    def to_json(self) -> dict:
        sep = vsorted(self.separator) if self.kind == "vertex" else [list(e) for e in self.separator]
        return {"kind": self.kind, "base_radius": self.base_radius, "radius": self.radius,
                "size": self.size, "separator": sep}


@dataclass(frozen=True)
class DegreeEstimate:
    kind: str
    lower: Fraction
    upper: object  # Fraction or UNBOUNDED
    radius_used: int
    lower_cert: object = None
    upper_cert: object = None
    flags: tuple = ()
    detail: dict = field(default_factory=dict)

    @property
    def exact(self) -> bool:
        return self.upper != UNBOUNDED and self.lower == self.upper

    def contains(self, x) -> bool:
        x = Fraction(x)
        return self.lower <= x and (self.upper == UNBOUNDED or x <= self.upper)

    def to_json(self) -> dict:
        def cert(c):
            return c.to_json() if hasattr(c, "to_json") else c

        return {
            "kind": self.kind,
            "lower": _q(self.lower),
            "upper": self.upper if self.upper == UNBOUNDED else _q(self.upper),
            "exact": self.exact,
            "radius_used": self.radius_used,
            "flags": list(self.flags),
            "detail": self.detail,
            "lower_cert": cert(self.lower_cert),
            "upper_cert": cert(self.upper_cert),
        }


# -- vertex / edge degree ----------------------------------------------------

def _rep(h: EndHandle, r: int) -> str:
    return h.rep_at(r)


def _prepare(p: Presentation, h: EndHandle, budget: int, min_gap: int = 2) -> EndHandle:
    if not p.locally_finite:
        raise GraphInputError(f"{p.name}: end degrees need a locally finite presentation")
    if p.finite:
        raise GraphInputError(f"{p.name}: finite graphs have no ends")
    if not check_handle(p, h):
        raise GraphInputError(f"handle {h.to_spec()} is inconsistent with {p.name}")
    r0 = h.chain[0][0]
    if budget < r0 + min_gap:
        raise GraphInputError(f"budget {budget} too small for a handle starting at radius {r0}")
    h = extend(p, h, budget)
    # the chain must list every radius from r0 on
    have = {r for r, _ in h.chain}
    if any(r not in have for r in range(r0, budget + 1)):
        h = EndHandle(tuple((r, rep) for r, rep in h.chain if r <= r0))
        h = extend(p, h, budget)
    return h


def probe_graph(p: Presentation, h: EndHandle, i: int, R: int):
    """Window graph for one base: attachment of C_i, C_i, and the rim of C_R.

    Returns ``(graph, attachment, rim)``; the interior of C_R is dropped.
    """
    h = extend(p, h, R) if h.radius < R else h
    top = R + p.escape_margin + 1
    ci = component_of(p, i, _rep(h, i), top)
    cr = component_of(p, R, _rep(h, R), top)
    rim = frozenset(v for v in cr if p.lvl(v) == R + 1)
    att = frozenset(u for v in ci if p.lvl(v) == i + 1 for u in p.nbrs(v) if p.lvl(u) <= i)
    verts = att | (ci - (cr - rim))
    return window_graph(p, verts), att, rim


def _menger_estimate(kind: str, p: Presentation, h: EndHandle, budget: int, bases: int, cap: int | None):
    h = _prepare(p, h, budget)
    r0 = h.chain[0][0]
    radii = list(range(max(r0, budget - bases), budget))
    values = []
    certs = []
    for i in radii:
        g, a, t = probe_graph(p, h, i, budget)
        if kind == "vertex":
            res = set_disjoint_paths(g, a, t)
            sep = tuple(vsorted(res.cut.separator))
        else:
            res = min_edge_cut(g, a, t)
            sep = tuple(res.cut.edges)
        values.append(res.size)
        certs.append((RaySystemCert(kind, i, budget, res.paths), SeparatorCert(kind, i, budget, sep)))
    lower = max(values)
    best = values.index(lower)
    flags = []
    stable = len(values) >= 2 and values[-1] == values[-2] == lower
    if cap is not None and lower > cap:
        flags.append("cap exceeded")
        stable = False
    if stable:
        upper, ucert = Fraction(values[-1]), certs[-1][1]
    else:
        upper, ucert = UNBOUNDED, None
        flags.append("not stabilized")
    detail = {"bases": radii, "packings": values}
    return DegreeEstimate(kind, Fraction(lower), upper, budget, certs[best][0], ucert, tuple(flags), detail)


def vertex_degree(p: Presentation, h: EndHandle, budget: int, bases: int = 3, cap: int | None = None) -> DegreeEstimate:
    return _menger_estimate("vertex", p, h, budget, bases, cap)


def edge_degree(p: Presentation, h: EndHandle, budget: int, bases: int = 3, cap: int | None = None) -> DegreeEstimate:
    return _menger_estimate("edge", p, h, budget, bases, cap)


def _div(a, b):
    if a == UNBOUNDED:
        return UNBOUNDED
    if b == UNBOUNDED:
        return Fraction(0)
    return Fraction(a) / Fraction(b)


def ratio_degree(p: Presentation, h: EndHandle, budget: int) -> DegreeEstimate:
    """d_e / d_v with interval arithmetic."""
    ev = edge_degree(p, h, budget)
    vv = vertex_degree(p, h, budget)
    lower = _div(ev.lower, vv.upper)
    upper = UNBOUNDED if ev.upper == UNBOUNDED else Fraction(ev.upper) / vv.lower
    flags = tuple(sorted(set(ev.flags) | set(vv.flags)))
    detail = {"edge": [_q(ev.lower), ev.upper if ev.upper == UNBOUNDED else _q(ev.upper)],
              "vertex": [_q(vv.lower), vv.upper if vv.upper == UNBOUNDED else _q(vv.upper)]}
    return DegreeEstimate("ratio", lower, upper, budget, ev.lower_cert, vv.upper_cert, flags, detail)


# -- relative degree -----------------------------------------------------------

@dataclass(frozen=True)
class ChainStep:
    boundary: frozenset  # the vertex boundary, inside the region
    region: frozenset  # the region's part inside the window
    edges: int  # size of the edge boundary
    ratio: Fraction
    minimal: bool | None  # boundary is a minimal separator from the previous one

    def to_json(self) -> dict:
        return {"boundary": vsorted(self.boundary), "region_size": len(self.region), "edges": self.edges,
                "ratio": _q(self.ratio), "minimal": self.minimal}


@dataclass
class RegionChain:
    """Nested regions H_0 ⊇ H_1 ⊇ ... inside one finite window graph."""

    steps: list
    window: FiniteGraph
    rim: frozenset  # deep vertices standing in for the ends of the regions

    def ratios(self) -> list:
        return [s.ratio for s in self.steps]

    def verify(self, check_minimal: bool = True) -> bool:
        g = self.window
        for prev, cur in zip(self.steps, self.steps[1:]):
            if not cur.region <= prev.region - prev.boundary:
                return False
            if not cur.boundary <= cur.region:
                return False
            outside = {(x, u) for x in cur.boundary for u in g.adj[x] if u not in cur.region}
            if any(not any(u not in cur.region for u in g.adj[x]) for x in cur.boundary):
                return False
            inner = cur.region - cur.boundary
            if any(u not in cur.region for v in inner for u in g.adj[v] if v not in self.rim):
                return False
            edges = sum(g.adj[x][u] for x, u in outside)
            if edges != cur.edges or Fraction(edges, len(cur.boundary)) != cur.ratio:
                return False
            if check_minimal and cur.minimal is not None:
                sub = g.subgraph(prev.region)
                b = self.rim & cur.region
                if cur.minimal != is_minimal_separator(sub, prev.boundary, b, cur.boundary):
                    return False
        return True

    def to_json(self) -> dict:
        return {"steps": [s.to_json() for s in self.steps], "ratios": [_q(r) for r in self.ratios()]}


def _edges_out(g: FiniteGraph, x: frozenset, region: frozenset) -> int:
    return sum(m for v in x for u, m in g.adj[v].items() if u not in region)


def _region_for(sub: FiniteGraph, x: frozenset, boundary: frozenset) -> frozenset:
    """X plus every component of sub - X except the one holding the old boundary.

    Finite pockets and other ends beyond X only lower the edge boundary, and
    the result stays connected when X is a minimal separator.
    """
    near = set()
    for comp in components(sub, within=sub.vertices - x):
        if comp & boundary:
            near |= comp
    return frozenset(sub.vertices - near)


def _closeness(p: Presentation, x: frozenset) -> tuple:
    levels = sorted((p.lvl(v) for v in x), reverse=True)
    return (levels, [vkey(v) for v in vsorted(x)])


def relative_degree(
    p: Presentation,
    h: EndHandle,
    budget: int,
    size_cap: int | None = None,
    candidates: int = 200,
) -> DegreeEstimate:
    """Relative degree from greedy chains of minimal-separator regions.

    Candidates at each layer are the inclusion-minimal separators between the
    current boundary and the rim, where the rim is either the handle's own
    deep vertices or all deep vertices of the current region. The chain takes
    the least ratio (ties: the separator closest to the current boundary).
    """
    h = _prepare(p, h, budget, min_gap=3)
    r0 = h.chain[0][0]
    flags = []
    if size_cap is None:
        vv = vertex_degree(p, h, budget)
        if vv.upper != UNBOUNDED:
            size_cap = 2 * int(vv.upper) + 2
        else:
            flags.append("no size cap (vertex degree not bounded)")
    top = budget + 1
    h0 = component_of(p, r0, _rep(h, r0), top)
    g = window_graph(p, h0)
    deep = frozenset(v for v in h0 if p.lvl(v) == top)
    own = frozenset(v for v in component_of(p, budget, _rep(h, budget), top) if p.lvl(v) == top)
    b0 = frozenset(v for v in h0 if p.lvl(v) == r0 + 1)
    e0 = sum(1 for v in b0 for u in p.nbrs(v) if p.lvl(u) <= r0)
    steps = [ChainStep(b0, h0, e0, Fraction(e0, len(b0)), None)]
    seen_ratios = []
    truncated = False
    region, boundary = h0, b0
    while True:
        sub = g.subgraph(region)
        pool = {}
        rims = [own & region]
        if deep & region != rims[0]:
            rims.append(deep & region)
        for rim in rims:
            if not rim or rim & boundary:
                continue
            res = minimal_separators(sub, boundary, rim, size_cap, candidates)
            truncated |= not res.complete
            for x in res.separators:
                if not x or x & boundary:
                    continue
                hx = _region_for(sub, x, boundary)
                if not hx & own or x in pool:
                    continue
                e = _edges_out(sub, x, hx)
                pool[x] = (Fraction(e, len(x)), e, hx)
        if not pool:
            break
        for ratio, *_ in pool.values():
            seen_ratios.append(ratio)
        x, (ratio, e, hx) = min(pool.items(), key=lambda kv: (kv[1][0], _closeness(p, kv[0]), len(kv[1][2])))
        minimal = is_minimal_separator(sub, boundary, deep & hx, x)
        steps.append(ChainStep(x, hx, e, ratio, minimal))
        region, boundary = hx, x
    chain = RegionChain(steps, g, deep)
    if truncated:
        flags.append("enumeration truncated")
    if size_cap is not None:
        flags.append("capped")
    tail = [s.ratio for s in steps[1:]]
    detail = {"size_cap": size_cap, "candidates": len(seen_ratios), "chain": [_q(r) for r in tail]}
    if len(tail) < 2:
        flags.append("inconclusive")
        lower = min(seen_ratios) if seen_ratios else Fraction(0)
        return DegreeEstimate("relative", lower, UNBOUNDED, budget, None, chain, tuple(flags), detail)
    upper = max(tail[-2:])
    lower = min(seen_ratios)
    return DegreeEstimate("relative", lower, upper, budget, "min ratio over all enumerated candidates", chain,
                          tuple(flags), detail)


# -- the degeneracy of non-minimal chains -------------------------------------------

def _far_vertices(g: FiniteGraph, pool: list, avoid: set, n: int) -> list:
    """Greedily pick vertices at pairwise distance >= 3, also >= 3 from ``avoid``."""
    picked: list = []
    blocked = set()
    for v in avoid:
        blocked.add(v)
        for u in g.adj[v]:
            blocked.add(u)
            blocked |= set(g.adj[u])
    for v in pool:
        if len(picked) == n:
            break
        if v in blocked:
            continue
        picked.append(v)
        blocked.add(v)
        for u in g.adj[v]:
            blocked.add(u)
            blocked |= set(g.adj[u])
    return picked


def punctured_chain(p: Presentation, h: EndHandle, budget: int, target: Fraction = Fraction(11, 10),
                    steps: int = 2) -> RegionChain:
    """A chain without the minimality condition whose ratios fall to ``target``.

    Region j is the handle component C_r (r = r0 + j) with far-apart vertices
    deleted from the part of C_r outside C_{r+1}. Each deleted vertex adds
    its degree to the edge boundary and as many vertices to the vertex
    boundary, pushing the ratio towards 1, while C_{r+1} still nests inside
    the region minus its boundary.
    """
    h = _prepare(p, h, budget, min_gap=3)
    r0 = h.chain[0][0]
    top = budget + 1
    h0 = component_of(p, r0, _rep(h, r0), top)
    g = window_graph(p, h0)
    deep = frozenset(v for v in h0 if p.lvl(v) == top)
    b0 = frozenset(v for v in h0 if p.lvl(v) == r0 + 1)
    e0 = sum(1 for v in b0 for u in p.nbrs(v) if p.lvl(u) <= r0)
    chain = [ChainStep(b0, h0, e0, Fraction(e0, len(b0)), None)]
    for r in range(r0 + 1, min(r0 + 1 + steps, budget)):
        prev = chain[-1]
        comp = component_of(p, r, _rep(h, r), top)
        nxt = component_of(p, r + 1, _rep(h, r + 1), top)
        seeds = frozenset(v for v in comp if p.lvl(v) == r + 1)
        near_next = set(nxt) | {u for v in nxt for u in g.adj[v]}
        pool = [v for v in comp if v not in near_next and p.lvl(v) < top and v not in seeds]
        pool.sort(key=lambda v: (p.lvl(v), vkey(v)))
        e_seeds = sum(1 for v in seeds for u in p.nbrs(v) if p.lvl(u) <= r)
        best = None
        for n in range(len(pool) + 1):
            holes = _far_vertices(g, pool, set(seeds), n)
            if len(holes) < n:
                break
            reg = comp - set(holes)
            bnd = frozenset(v for v in reg if v in seeds or any(u in holes for u in g.adj[v]))
            e = e_seeds + sum(g.degree(v) for v in holes)
            best = (reg, bnd, e, Fraction(e, len(bnd)))
            if best[3] <= target:
                break
        reg, bnd, e, ratio = best
        minimal = is_minimal_separator(g.subgraph(prev.region), prev.boundary, deep & reg, bnd)
        chain.append(ChainStep(bnd, frozenset(reg), e, ratio, minimal))
    return RegionChain(chain, g, deep)
