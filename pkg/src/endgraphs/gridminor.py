"""Constructive [k]x[m] grid minors near an end.

Rays are packed across an annulus of one end component, an auxiliary
graph records which rays are joined by ``p_conn`` disjoint connecting paths
avoiding the other rays, and an ordered path of k rays becomes the columns.
Connectors between consecutive columns are aligned into rows; the
certificate is checked by building the branch sets explicitly.

Everything here is finite evidence: a certificate in a ball does not by
itself witness a [k]xN minor, and a failure does not refute one.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .enddeg import probe_graph
from .flow import VertexCut, set_disjoint_paths
from .graph import FiniteGraph, GraphInputError, is_connected, is_path, vkey, vsorted
from .presentation import EndHandle, Presentation, check_handle, extend

STAGES = ("packing", "adjacency", "recursion depth", "stitching")


@dataclass(frozen=True)
class RaySystem:
    paths: tuple
    r0: int
    r1: int
    sources: frozenset
    sinks: frozenset

    def verify(self, g: FiniteGraph) -> bool:
        seen: set = set()
        for path in self.paths:
            if not is_path(g, list(path)) or seen & set(path):
                return False
            seen |= set(path)
            if path[0] not in self.sources or path[-1] not in self.sinks:
                return False
        return True


@dataclass(frozen=True)
class RayFailure:
    """Fewer than ``count`` disjoint paths; ``cut`` separates the frontiers."""

    requested: int
    achieved: int
    cut: VertexCut
    system: RaySystem

    def verify(self, g: FiniteGraph) -> bool:
        return len(self.cut.separator) == self.achieved and self.cut.verify(g) and (
            self.system.sources <= self.cut.side_a | self.cut.separator
        ) and self.system.sinks <= self.cut.side_b | self.cut.separator


def annulus(p: Presentation, h: EndHandle, r0: int, r1: int):
    """Graph between the frontier of B_{r0} and the rim of C_{r1}."""
    if not r1 > r0 >= 0:
        raise GraphInputError("annulus needs 0 <= r0 < r1")
    if not p.locally_finite or p.finite:
        raise GraphInputError("grid extraction needs a locally finite infinite presentation")
    if not check_handle(p, h):
        raise GraphInputError("end handle does not describe a nested chain")
    h = extend(p, h, r1) if h.radius < r1 else h
    return probe_graph(p, h, r0, r1)


def disjoint_rays(p: Presentation, h: EndHandle, count: int | None, r0: int, r1: int):
    """``count`` disjoint frontier-to-frontier paths, or the maximum and a cut."""
    g, a, t = annulus(p, h, r0, r1)
    res = set_disjoint_paths(g, a, t) if count is None else set_disjoint_paths(g, a, t, limit=count)
    system = RaySystem(res.paths, r0, r1, a, t)
    if count is not None and res.size < count:
        return RayFailure(count, res.size, res.cut, system)
    return system


@dataclass
class AuxGraph:
    graph: FiniteGraph  # vertices are ray indices
    witnesses: dict  # (i, j) -> connecting paths
    p_conn: int


def _connectors(g: FiniteGraph, ci, cj, avoid, limit=None):
    rest = g.remove_vertices(set(avoid) - set(ci) - set(cj))
    if limit is None:
        return set_disjoint_paths(rest, ci, cj).paths
    return set_disjoint_paths(rest, ci, cj, limit=limit).paths


def ray_adjacency(g: FiniteGraph, rays, p_conn: int, indices=None) -> AuxGraph:
    """Edge i-j iff p_conn disjoint V(R_i)-V(R_j) paths avoid every other ray."""
    if p_conn < 1:
        raise GraphInputError("p_conn must be at least 1")
    rays = [tuple(r) for r in rays]
    idx = list(range(len(rays))) if indices is None else list(indices)
    occupied = {i: set(rays[i]) for i in idx}
    edges, wit = [], {}
    for i, j in combinations(idx, 2):
        others = set().union(*(occupied[x] for x in idx if x not in (i, j)))
        paths = _connectors(g, rays[i], rays[j], others, limit=p_conn)
        if len(paths) >= p_conn:
            edges.append((i, j))
            wit[(i, j)] = paths
    return AuxGraph(FiniteGraph(idx, edges), wit, p_conn)


def _k_path(aux: FiniteGraph, k: int):
    """First simple path on k vertices in deterministic DFS order."""
    order = sorted(aux.vertices)
    if k == 1 and order:
        return [order[0]]

    def go(path, seen):
        if len(path) == k:
            return list(path)
        for u in sorted(aux.adj[path[-1]]):
            if u not in seen:
                seen.add(u)
                path.append(u)
                found = go(path, seen)
                if found:
                    return found
                path.pop()
                seen.discard(u)
        return None

    for v in order:
        found = go([v], {v})
        if found:
            return found
    return None


def _spanning_tree(aux: FiniteGraph) -> dict:
    root = min(aux.vertices)
    parent = {root: None}
    queue = [root]
    for v in queue:
        for u in sorted(aux.adj[v]):
            if u not in parent:
                parent[u] = v
                queue.append(u)
    return parent


@dataclass
class GridFailure:
    stage: str
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"status": "failure", "stage": self.stage, "detail": self.detail, "evidence": True}


def _order(g, rays, pool, k, p_conn, depth, trace):
    """Ordered list of k ray indices whose consecutive pairs are adjacent."""
    aux = ray_adjacency(g, rays, p_conn, pool)
    trace.append({"depth": depth, "rays": list(pool), "edges": [list(e) for e in aux.graph.edges()]})
    path = _k_path(aux.graph, k)
    if path:
        return path
    if k <= 2:
        return GridFailure("adjacency", {"depth": depth, "k": k, "rays": list(pool)})
    if not is_connected(aux.graph):
        return GridFailure("adjacency", {"depth": depth, "reason": "auxiliary graph disconnected"})
    parent = _spanning_tree(aux.graph)
    deg = {v: 0 for v in parent}
    for v, u in parent.items():
        if u is not None:
            deg[v] += 1
            deg[u] += 1
    leaves = sorted((v for v in deg if deg[v] <= 1), key=lambda v: vkey(rays[v][0]))[:3]
    if len(leaves) < 3 or len(pool) - 3 < k - 2:
        return GridFailure("recursion depth", {"depth": depth, "k": k, "rays": len(pool)})
    inner = _order(g, rays, [v for v in pool if v not in leaves], k - 2, p_conn, depth + 1, trace)
    if isinstance(inner, GridFailure):
        return inner
    # reintegrate: attach two of the removed leaves (or spare rays) at the ends
    spare = sorted(set(pool) - set(inner), key=lambda v: (v not in leaves, vkey(rays[v][0])))
    for x in spare:
        for y in spare:
            if x == y:
                continue
            cand = [x] + inner + [y]
            sub = ray_adjacency(g, rays, p_conn, cand).graph
            if all(b in sub.adj[a] for a, b in zip(cand, cand[1:])):
                return cand
    return GridFailure("stitching", {"depth": depth, "inner": inner, "spare": spare})


@dataclass(frozen=True)
class GridMinorCert:
    columns: tuple  # k vertex paths
    connectors: tuple  # connectors[j][i]: row i path from column j to column j+1
    k: int
    m: int
    p_conn: int
    annulus: tuple = ()

    def to_json(self) -> dict:
        return {
            "schema": "grid-cert/1",
            "k": self.k,
            "m": self.m,
            "p_conn": self.p_conn,
            "annulus": list(self.annulus),
            "columns": [list(c) for c in self.columns],
            "connectors": [[list(c) for c in pair] for pair in self.connectors],
            "evidence": True,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "GridMinorCert":
        try:
            return cls(
                tuple(tuple(c) for c in obj["columns"]),
                tuple(tuple(tuple(c) for c in pair) for pair in obj["connectors"]),
                int(obj["k"]),
                int(obj["m"]),
                int(obj.get("p_conn", 1)),
                tuple(obj.get("annulus", ())),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphInputError(f"malformed grid certificate: {exc}") from exc

    def restrict(self, k: int | None = None, m: int | None = None) -> "GridMinorCert":
        """Drop outer columns and trailing rows."""
        k = self.k if k is None else k
        m = self.m if m is None else m
        if not (1 <= k <= self.k and 1 <= m <= self.m):
            raise GraphInputError("restriction must shrink the grid")
        conns = tuple(pair[:m] for pair in self.connectors[: k - 1])
        return GridMinorCert(self.columns[:k], conns, k, m, self.p_conn, self.annulus)


def _attachments(cert: GridMinorCert):
    """Per column, per row: positions of the row's connector ends on it."""
    pos = [{v: i for i, v in enumerate(c)} for c in cert.columns]
    rows = [[[] for _ in range(cert.m)] for _ in range(cert.k)]
    for j, pair in enumerate(cert.connectors):
        for i, path in enumerate(pair):
            rows[j][i].append(pos[j][path[0]])
            rows[j + 1][i].append(pos[j + 1][path[-1]])
    return rows


def branch_sets(cert: GridMinorCert) -> dict:
    """(row, column) -> vertex set; columns cut between consecutive rows."""
    att = _attachments(cert)
    out = {}
    for j, col in enumerate(cert.columns):
        start = 0
        for i in range(cert.m):
            if i == cert.m - 1:
                end = len(col)
            elif att[j][i]:
                end = max(att[j][i]) + 1
            else:  # k = 1: one vertex per row
                end = start + 1
            out[(i, j)] = set(col[start:end])
            start = end
    for j, pair in enumerate(cert.connectors):
        for i, path in enumerate(pair):
            out[(i, j)] |= set(path[1:-1])
    return {key: frozenset(v) for key, v in out.items()}


def check_grid_minor(ball: FiniteGraph, sets: dict, k: int, m: int) -> bool:
    """Explicit check: disjoint connected branch sets with all grid adjacencies."""
    seen: set = set()
    for key in [(i, j) for i in range(m) for j in range(k)]:
        b = sets.get(key)
        if not b or b & seen or not b <= ball.vertices or not is_connected(ball, within=b):
            return False
        seen |= b

    def touch(x, y):
        return any(u in y for v in x for u in ball.adj[v])

    for i in range(m):
        for j in range(k):
            if j + 1 < k and not touch(sets[(i, j)], sets[(i, j + 1)]):
                return False
            if i + 1 < m and not touch(sets[(i, j)], sets[(i + 1, j)]):
                return False
    return True


def verify_grid_cert(cert: GridMinorCert, ball: FiniteGraph) -> bool:
    """Check every certificate invariant against the ball, then the branch sets."""
    k, m = cert.k, cert.m
    if k < 1 or m < 1 or len(cert.columns) != k or len(cert.connectors) != max(k - 1, 0):
        return False
    owner = {}
    for j, col in enumerate(cert.columns):
        if not col or not all(v in ball for v in col) or not is_path(ball, list(col)):
            return False
        for v in col:
            if v in owner:
                return False
            owner[v] = j
    if k == 1 and len(cert.columns[0]) < m:
        return False
    used: set = set()
    for j, pair in enumerate(cert.connectors):
        if len(pair) < m:
            return False
        for path in pair[:m]:
            if len(path) < 2 or not all(v in ball for v in path) or not is_path(ball, list(path)):
                return False
            if owner.get(path[0]) != j or owner.get(path[-1]) != j + 1:
                return False
            inner = set(path[1:-1])
            if len(inner) != len(path) - 2 or inner & owner.keys() or inner & used:
                return False
            used |= inner
    if len(cert.connectors) and any(len(pair) != m for pair in cert.connectors):
        return False
    att = _attachments(cert)
    for j in range(k):
        for i in range(m - 1):
            if att[j][i] and max(att[j][i]) >= min(att[j][i + 1]):
                return False
    return check_grid_minor(ball, branch_sets(cert), k, m)


def _rows(columns, pairs):
    """Greedy earliest alignment of per-pair connectors into rows."""
    pos = [{v: i for i, v in enumerate(c)} for c in columns]
    k = len(columns)
    ptr = [-1] * k
    left = [list(pair) for pair in pairs]
    rows = []
    while True:
        row, hi = [], list(ptr)
        ok = True
        for j in range(k - 1):
            best = None
            for path in left[j]:
                a, b = pos[j][path[0]], pos[j + 1][path[-1]]
                if a > ptr[j] and b > ptr[j + 1]:
                    if best is None or (b, a) < best[0]:
                        best = ((b, a), path)
            if best is None:
                ok = False
                break
            (b, a), path = best
            row.append(path)
            hi[j] = max(hi[j], a)
            hi[j + 1] = max(hi[j + 1], b)
        if not ok:
            return rows
        for j, path in enumerate(row):
            left[j].remove(path)
        rows.append(row)
        ptr = hi


def assemble(g: FiniteGraph, columns, p_conn: int, annulus_radii=()) -> GridMinorCert:
    """Connectors for consecutive columns, aligned into rows."""
    columns = [tuple(c) for c in columns]
    k = len(columns)
    taken: set = set()
    pairs = []
    for j in range(k - 1):
        others = set().union(*(set(c) for x, c in enumerate(columns) if x not in (j, j + 1)))
        paths = _connectors(g, columns[j], columns[j + 1], others | taken)
        pairs.append(paths)
        for path in paths:
            taken |= set(path[1:-1])
    if k == 1:
        return GridMinorCert(tuple(columns), (), 1, len(columns[0]), p_conn, tuple(annulus_radii))
    rows = _rows(columns, pairs)
    conns = tuple(tuple(row[j] for row in rows) for j in range(k - 1))
    return GridMinorCert(tuple(columns), conns, k, len(rows), p_conn, tuple(annulus_radii))


@dataclass
class Extraction:
    cert: GridMinorCert | None
    failure: GridFailure | None
    rays: int
    trace: list

    @property
    def ok(self) -> bool:
        return self.cert is not None

    def to_json(self) -> dict:
        out = {"rays": self.rays, "recursion": self.trace}
        if self.cert is not None:
            out.update({"status": "certificate", "certificate": self.cert.to_json()})
        else:
            out.update(self.failure.to_json())
        return out


def grid_minor_extract(
    p: Presentation, h: EndHandle, k: int, r0: int, r1: int, p_conn: int = 1, m_min: int = 1
) -> Extraction:
    if k < 1:
        raise GraphInputError("k must be at least 1")
    g, a, t = annulus(p, h, r0, r1)
    rays = set_disjoint_paths(g, a, t).paths
    trace: list = []
    if len(rays) < k:
        fail = GridFailure("packing", {"rays": len(rays), "k": k})
        return Extraction(None, fail, len(rays), trace)
    order = _order(g, rays, list(range(len(rays))), k, p_conn, 0, trace)
    if isinstance(order, GridFailure):
        return Extraction(None, order, len(rays), trace)
    cert = assemble(g, [rays[i] for i in order], p_conn, (r0, r1))
    if cert.m < m_min:
        fail = GridFailure("adjacency", {"rows": cert.m, "m_min": m_min, "columns": order})
        return Extraction(None, fail, len(rays), trace)
    if not verify_grid_cert(cert, g):  # never emit an unverifiable certificate
        return Extraction(None, GridFailure("stitching", {"reason": "assembly failed verification"}), len(rays), trace)
    return Extraction(cert, None, len(rays), trace)


@dataclass
class ExhaustiveResult:
    found: GridMinorCert | None
    systems: int
    candidates: int  # systems whose pair graph admits an ordering

    def to_json(self) -> dict:
        return {
            "found": self.found is not None,
            "systems": self.systems,
            "candidates": self.candidates,
            "certificate": self.found.to_json() if self.found else None,
        }


def column_systems(g: FiniteGraph, level: dict, k: int, sources, sinks):
    """Every set of k disjoint source-to-sink paths, each meeting the sources
    only first and the sinks only last. Needs level steps of at most one per
    edge; a path then crosses every level between its ends, which bounds how
    many vertices a level can spare."""
    sources, sinks = frozenset(sources), frozenset(sinks)
    lo, hi = min(level[v] for v in sources), max(level[v] for v in sinks)
    width = {}
    for v in g.vertices:
        width[level[v]] = width.get(level[v], 0) + 1
    used = {ell: 0 for ell in width}
    taken: set = set()
    starts = vsorted(sources)

    def room(ell, extra):
        return used[ell] + extra <= width[ell]

    def grow(path, visited_levels, left, out, after):
        v = path[-1]
        for u in vsorted(g.adj[v]):
            if u in taken or u in sources:
                continue
            ell = level[u]
            new_level = ell not in visited_levels
            # vertices still owed at this level: one per unbuilt path
            if not room(ell, 1 + left):
                continue
            taken.add(u)
            used[ell] += 1
            path.append(u)
            if new_level:
                visited_levels.add(ell)
            if u in sinks:
                if all(x in visited_levels for x in range(lo, hi + 1)):
                    yield from after(tuple(path))
            else:
                yield from grow(path, visited_levels, left, out, after)
            if new_level:
                visited_levels.discard(ell)
            path.pop()
            used[ell] -= 1
            taken.discard(u)

    def build(chosen, first):
        if len(chosen) == k:
            yield tuple(chosen)
            return
        left = k - len(chosen) - 1
        for si in range(first, len(starts)):
            s = starts[si]
            if s in taken or not room(level[s], 1 + left) or len(starts) - si < k - len(chosen):
                continue
            taken.add(s)
            used[level[s]] += 1

            def after(path, si=si):
                chosen.append(path)
                yield from build(chosen, si + 1)
                chosen.pop()

            if s in sinks:
                yield from after((s,))
            else:
                yield from grow([s], {level[s]}, left, None, after)
            used[level[s]] -= 1
            taken.discard(s)

    yield from build([], 0)


def exhaustive_grid_search(
    g: FiniteGraph, level: dict, k: int, m: int, p_conn: int, sources, sinks, stop_at_first: bool = True
) -> ExhaustiveResult:
    """Bounded oracle over every column system in ``g``.

    A certificate needs, for each consecutive pair, max(m, p_conn) disjoint
    connectors avoiding the other columns; systems whose pair graph has no
    Hamiltonian path on k columns are ruled out, the rest are assembled and
    verified.
    """
    need = max(m, p_conn)
    systems = candidates = 0
    found = None
    for cols in column_systems(g, level, k, sources, sinks):
        systems += 1
        aux = ray_adjacency(g, cols, need)
        order = _k_path(aux.graph, k)
        if order is None:
            continue
        candidates += 1
        cert = assemble(g, [cols[i] for i in order], p_conn)
        if cert.m >= m and verify_grid_cert(cert.restrict(m=m), g):
            found = cert.restrict(m=m)
            if stop_at_first:
                break
    return ExhaustiveResult(found, systems, candidates)
