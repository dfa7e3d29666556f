"""Finite undirected multigraphs and the basic scans used everywhere else.

Boundary convention: for a vertex set ``H`` the *vertex boundary* is taken
inside ``H``, i.e. the vertices of ``H`` that have a neighbour outside ``H``.
Both conventions appear in the literature; this one makes
``|edge_boundary(H)| / |vertex_boundary(H)|`` the natural ratio of a region
and guarantees that every boundary edge has its ``H``-endpoint in the vertex
boundary.
"""
from __future__ import annotations

import json
import re
from collections import Counter, deque
from typing import Hashable, Iterable, Iterator, Mapping

Vertex = Hashable


class GraphInputError(ValueError):
    """Malformed graph data or unknown vertex ids."""


def vkey(v):
    """Sort key giving a total, deterministic order on mixed vertex ids."""
    if isinstance(v, str):
        return (1, v)
    if isinstance(v, int):
        return (0, v)
    return (2, repr(v))


def vsorted(vs: Iterable) -> list:
    return sorted(vs, key=vkey)


class FiniteGraph:
    """Immutable finite multigraph without loops.

    ``edges`` may repeat a pair (each occurrence adds one to its multiplicity)
    or carry an explicit multiplicity as a third entry.
    """

    __slots__ = ("_adj", "_vertices", "_hash")

    def __init__(self, vertices: Iterable = (), edges: Iterable = ()):
        adj: dict = {}
        for v in vertices:
            adj.setdefault(v, {})
        for e in edges:
            if len(e) == 3:
                u, v, m = e
            else:
                (u, v), m = e, 1
            if u == v:
                raise GraphInputError(f"loop at {u!r} rejected")
            if m < 1:
                raise GraphInputError(f"multiplicity {m} < 1 on {u!r}-{v!r}")
            au = adj.setdefault(u, {})
            av = adj.setdefault(v, {})
            au[v] = au.get(v, 0) + m
            av[u] = av.get(u, 0) + m
        self._adj = adj
        self._vertices = frozenset(adj)
        self._hash = None

    @classmethod
    def _from_adj(cls, adj: dict) -> "FiniteGraph":
        g = cls.__new__(cls)
        g._adj = adj
        g._vertices = frozenset(adj)
        g._hash = None
        return g

    # -- basic accessors -------------------------------------------------
    @property
    def vertices(self) -> frozenset:
        return self._vertices

    def __len__(self) -> int:
        return len(self._adj)

    def __contains__(self, v) -> bool:
        return v in self._adj

    def __iter__(self) -> Iterator:
        return iter(vsorted(self._adj))

    @property
    def adj(self) -> Mapping:
        """Read-only view: vertex -> {neighbour: multiplicity}."""
        return self._adj

    def neighbors(self, v) -> list:
        self._check(v)
        return vsorted(self._adj[v])

    def multiplicity(self, u, v) -> int:
        return self._adj.get(u, {}).get(v, 0)

    def degree(self, v) -> int:
        self._check(v)
        return sum(self._adj[v].values())

    def simple_degree(self, v) -> int:
        return len(self._adj[v])

    def edges(self) -> list[tuple]:
        """Sorted list of ``(u, v, multiplicity)`` with ``vkey(u) < vkey(v)``."""
        out = []
        for u, nb in self._adj.items():
            ku = vkey(u)
            for v, m in nb.items():
                if ku < vkey(v):
                    out.append((u, v, m))
        out.sort(key=lambda e: (vkey(e[0]), vkey(e[1])))
        return out

    def num_edges(self) -> int:
        return sum(sum(nb.values()) for nb in self._adj.values()) // 2

    def is_simple(self) -> bool:
        return all(m == 1 for nb in self._adj.values() for m in nb.values())

    def min_degree(self) -> int:
        return min((self.degree(v) for v in self._adj), default=0)

    def average_degree(self):
        from fractions import Fraction

        if not self._adj:
            return Fraction(0)
        return Fraction(2 * self.num_edges(), len(self._adj))

    def _check(self, v):
        if v not in self._adj:
            raise GraphInputError(f"unknown vertex {v!r}")

    def check_vertices(self, vs: Iterable) -> frozenset:
        vs = frozenset(vs)
        bad = [v for v in vs if v not in self._adj]
        if bad:
            raise GraphInputError(f"unknown vertices {vsorted(bad)[:5]!r}")
        return vs

    # -- derived graphs --------------------------------------------------
    def subgraph(self, vs: Iterable) -> "FiniteGraph":
        keep = self.check_vertices(vs)
        adj = {v: {u: m for u, m in self._adj[v].items() if u in keep} for v in keep}
        return FiniteGraph._from_adj(adj)

    def remove_vertices(self, vs: Iterable) -> "FiniteGraph":
        drop = frozenset(vs)
        return self.subgraph(v for v in self._adj if v not in drop)

    def remove_edge(self, u, v, count: int = 1) -> "FiniteGraph":
        m = self.multiplicity(u, v)
        if m == 0:
            raise GraphInputError(f"no edge {u!r}-{v!r}")
        adj = {w: dict(nb) for w, nb in self._adj.items()}
        left = m - count
        if left > 0:
            adj[u][v] = adj[v][u] = left
        else:
            del adj[u][v]
            del adj[v][u]
        return FiniteGraph._from_adj(adj)

    def add_edges(self, edges: Iterable) -> "FiniteGraph":
        return FiniteGraph(self._adj, list(self.edges()) + list(edges))

    def relabel(self, mapping: Mapping) -> "FiniteGraph":
        return FiniteGraph(
            (mapping[v] for v in self._adj),
            ((mapping[u], mapping[v], m) for u, v, m in self.edges()),
        )

    # -- identity ---------------------------------------------------------
    def _key(self):
        return (frozenset(self._vertices), frozenset((frozenset((u, v)), m) for u, v, m in self.edges()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteGraph):
            return NotImplemented
        return self._adj == other._adj

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._key())
        return self._hash

    def __repr__(self) -> str:
        return f"FiniteGraph(n={len(self)}, m={self.num_edges()})"


# -- scans ----------------------------------------------------------------

def vertex_boundary(g: FiniteGraph, h: Iterable) -> frozenset:
    """Vertices of ``h`` with at least one neighbour outside ``h``."""
    h = g.check_vertices(h)
    return frozenset(v for v in h if any(u not in h for u in g.adj[v]))


def edge_boundary(g: FiniteGraph, h: Iterable) -> list[tuple]:
    """Edges with exactly one endpoint in ``h`` as ``(inside, outside, mult)``.

    The multiset size is ``sum(m for *_, m in result)``.
    """
    h = g.check_vertices(h)
    out = []
    for v in vsorted(h):
        for u, m in g.adj[v].items():
            if u not in h:
                out.append((v, u, m))
    out.sort(key=lambda e: (vkey(e[0]), vkey(e[1])))
    return out


def edge_boundary_size(g: FiniteGraph, h: Iterable) -> int:
    return sum(m for _, _, m in edge_boundary(g, h))


def components(g: FiniteGraph, within: Iterable | None = None) -> list[frozenset]:
    """Connected components (of ``g[within]`` if given), canonically ordered."""
    allowed = g.vertices if within is None else frozenset(within)
    seen: set = set()
    comps = []
    for s in vsorted(allowed):
        if s in seen:
            continue
        comp = {s}
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for u in g.adj[v]:
                if u in allowed and u not in seen:
                    seen.add(u)
                    comp.add(u)
                    queue.append(u)
        comps.append(frozenset(comp))
    return comps


def is_connected(g: FiniteGraph, within: Iterable | None = None) -> bool:
    allowed = g.vertices if within is None else frozenset(within)
    if not allowed:
        return True
    return len(components(g, allowed)) == 1


def reachable(g: FiniteGraph, sources: Iterable, blocked: Iterable = ()) -> frozenset:
    blocked = frozenset(blocked)
    seen = {s for s in sources if s not in blocked}
    queue = deque(seen)
    while queue:
        v = queue.popleft()
        for u in g.adj[v]:
            if u not in seen and u not in blocked:
                seen.add(u)
                queue.append(u)
    return frozenset(seen)


def bfs_distances(g: FiniteGraph, sources: Iterable, within: Iterable | None = None) -> dict:
    allowed = None if within is None else frozenset(within)
    dist = {s: 0 for s in sources}
    queue = deque(vsorted(dist))
    while queue:
        v = queue.popleft()
        for u in vsorted(g.adj[v]):
            if u not in dist and (allowed is None or u in allowed):
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def is_path(g: FiniteGraph, path: list) -> bool:
    if not path or len(set(path)) != len(path):
        return False
    return all(v in g for v in path) and all(g.multiplicity(a, b) > 0 for a, b in zip(path, path[1:]))


# -- serialisation --------------------------------------------------------

def to_json_obj(g: FiniteGraph, **extra) -> dict:
    obj = {
        "vertices": [str(v) for v in vsorted(g.vertices)],
        "edges": [[str(u), str(v), m] for u, v, m in g.edges()],
    }
    for k, v in extra.items():
        obj[k] = v
    return obj


def from_json_obj(obj) -> FiniteGraph:
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise GraphInputError("graph JSON needs 'vertices' and 'edges'")
    verts = [str(v) for v in obj["vertices"]]
    edges = []
    for i, e in enumerate(obj["edges"]):
        if not isinstance(e, list) or len(e) not in (2, 3):
            raise GraphInputError(f"edges[{i}]: expected [u, v] or [u, v, mult]")
        m = int(e[2]) if len(e) == 3 else 1
        edges.append((str(e[0]), str(e[1]), m))
    known = set(verts)
    for u, v, _ in edges:
        if u not in known or v not in known:
            raise GraphInputError(f"edge {u}-{v} uses an undeclared vertex")
    return FiniteGraph(verts, edges)


def from_json(text: str) -> FiniteGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphInputError(f"JSON error at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    return from_json_obj(obj)


def _dot_id(v) -> str:
    s = str(v)
    return s if re.fullmatch(r"[A-Za-z0-9_.]+", s) else json.dumps(s)


def to_dot(g: FiniteGraph, name: str = "G", frontier: Iterable = ()) -> str:
    """DOT export; parallel edges are written as repeated lines."""
    frontier = frozenset(frontier)
    lines = [f"graph {_dot_id(name)} {{"]
    for v in vsorted(g.vertices):
        attr = " [frontier=true]" if v in frontier else ""
        lines.append(f"  {_dot_id(v)}{attr};")
    for u, v, m in g.edges():
        for _ in range(m):
            lines.append(f"  {_dot_id(u)} -- {_dot_id(v)};")
    lines.append("}")
    return "\n".join(lines) + "\n"


_DOT_TOKEN = re.compile(r'"((?:[^"\\]|\\.)*)"|([A-Za-z0-9_.]+)')


def from_dot(text: str) -> FiniteGraph:
    """Parse the undirected DOT subset written by :func:`to_dot`."""
    body_start = text.find("{")
    body_end = text.rfind("}")
    if body_start < 0 or body_end < body_start:
        raise GraphInputError("DOT: missing '{ ... }' body")
    head = text[:body_start]
    if "digraph" in head:
        raise GraphInputError("DOT: directed graphs are not supported")
    verts, edges = [], []
    offset = text.count("\n", 0, body_start) + 1
    for lineno, raw in enumerate(text[body_start + 1 : body_end].split("\n"), start=offset):
        line = re.sub(r"\[.*?\]", "", raw).strip().rstrip(";").strip()
        if not line or line.startswith("//"):
            continue
        if "->" in line:
            raise GraphInputError(f"DOT line {lineno}: directed edge")
        parts = [p.strip() for p in line.split("--")]
        ids = []
        for p in parts:
            m = _DOT_TOKEN.fullmatch(p)
            if not m:
                raise GraphInputError(f"DOT line {lineno}: cannot parse {p!r}")
            ids.append(json.loads(f'"{m.group(1)}"') if m.group(1) is not None else m.group(2))
        if len(ids) == 1:
            verts.append(ids[0])
        else:
            for a, b in zip(ids, ids[1:]):
                edges.append((a, b))
    return FiniteGraph(verts, edges)


def degree_counter(g: FiniteGraph) -> Counter:
    return Counter(g.degree(v) for v in g.vertices)
