"""Minimal k-(edge-)connectivity checks, degree censuses and small-graph sweeps.

Reports cover finite graphs only. Statements about infinite graphs are
approached through ball windows and end-degree estimates, never decided.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .connectivity import enumerate_cycles, is_k_connected, is_k_edge_connected
from .enddeg import UNBOUNDED, edge_degree, vertex_degree
from .flow import min_vertex_cut
from .graph import FiniteGraph, GraphInputError, components, vkey, vsorted
from .presentation import Presentation, ball, handles
from .smallgraphs import connected_graphs

MODES = (
    "edge-min-kconn",
    "vertex-min-kconn",
    "edge-min-kedge",
    "vertex-min-kedge",
    "subgraph-min",
    "induced-subgraph-min",
)
HEADER = "finite graph check; says nothing about infinite graphs beyond the window"
SUBGRAPH_CAP = 16


@dataclass
class MinimalityReport:
    mode: str
    k: int
    verdict: bool
    connected: bool  # k-(edge-)connectivity of g itself
    witnesses: dict = field(default_factory=dict)  # element -> separator / counterexample
    counterexample: object = None
    header: str = HEADER

    def to_json(self) -> dict:
        def enc(x):
            if isinstance(x, (frozenset, set)):
                return vsorted(x)
            if isinstance(x, tuple):
                return [enc(y) for y in x]
            return x

        wit = [{"element": enc(e), "witness": enc(w)} for e, w in sorted(self.witnesses.items(), key=lambda kv: repr(kv[0]))]
        return {
            "schema": "minimality-report/1",
            "mode": self.mode,
            "k": self.k,
            "verdict": self.verdict,
            "k_connected": self.connected,
            "witnesses": wit,
            "counterexample": enc(self.counterexample),
            "header": self.header,
        }


def _conn(g: FiniteGraph, k: int, kind: str):
    return is_k_connected(g, k) if kind == "vertex" else is_k_edge_connected(g, k)


def _cut_witness(rep):
    if rep.separator is not None:
        return rep.separator
    return ("too few vertices", rep.reason)


def _edge_list(g: FiniteGraph) -> list:
    return [(u, v) for u, v, _ in g.edges()]


def _deletion_report(g, k, mode, kind, elements, delete) -> MinimalityReport:
    base = _conn(g, k, kind)
    if not base:
        return MinimalityReport(mode, k, False, False, counterexample=("not k-connected", _cut_witness(base)))
    wit = {}
    for e in elements:
        rep = _conn(delete(e), k, kind)
        if rep:
            return MinimalityReport(mode, k, False, True, wit, counterexample=e)
        wit[e] = _cut_witness(rep)
    return MinimalityReport(mode, k, True, True, wit)


def _induced_counterexample(g: FiniteGraph, k: int):
    """A proper vertex subset inducing a k-connected graph, largest first."""
    order = vsorted(g.vertices)
    for size in range(len(order) - 1, k, -1):
        for combo in combinations(order, size):
            if is_k_connected(g.subgraph(combo), k):
                return frozenset(combo)
    return None


def check_minimality(g: FiniteGraph, k: int, mode: str, cap: int = SUBGRAPH_CAP) -> MinimalityReport:
    if mode not in MODES:
        raise GraphInputError(f"unknown mode {mode!r}; known: {', '.join(MODES)}")
    if k < 1:
        raise GraphInputError("k must be at least 1")
    if mode == "edge-min-kconn":
        return _deletion_report(g, k, mode, "vertex", _edge_list(g), lambda e: g.remove_edge(*e))
    if mode == "vertex-min-kconn":
        return _deletion_report(g, k, mode, "vertex", vsorted(g.vertices), lambda v: g.remove_vertices([v]))
    if mode == "edge-min-kedge":
        return _deletion_report(g, k, mode, "edge", _edge_list(g), lambda e: g.remove_edge(*e))
    if mode == "vertex-min-kedge":
        return _deletion_report(g, k, mode, "edge", vsorted(g.vertices), lambda v: g.remove_vertices([v]))
    if len(g) > cap:
        raise GraphInputError(f"too large for subgraph modes ({len(g)} > {cap} vertices)")
    # Deleting edges never raises connectivity, so a proper k-connected
    # subgraph exists iff some G - e is one or some proper G[U] is one.
    if mode == "subgraph-min":
        rep = check_minimality(g, k, "edge-min-kconn")
        if not rep.verdict:
            return MinimalityReport(mode, k, False, rep.connected, rep.witnesses, rep.counterexample)
    else:
        base = is_k_connected(g, k)
        if not base:
            return MinimalityReport(mode, k, False, False, counterexample=("not k-connected", _cut_witness(base)))
        rep = None
    bad = _induced_counterexample(g, k)
    wit = dict(rep.witnesses) if rep else {}
    if bad is not None:
        return MinimalityReport(mode, k, False, True, wit, counterexample=bad)
    for v in vsorted(g.vertices):
        wit[v] = _cut_witness(is_k_connected(g.remove_vertices([v]), k))
    return MinimalityReport(mode, k, True, True, wit)


def reverify(g: FiniteGraph, report: MinimalityReport) -> bool:
    """Re-check every witness: the element deletion really breaks connectivity."""
    kind = "edge" if report.mode.endswith("kedge") else "vertex"
    for elem, sep in report.witnesses.items():
        h = g.remove_edge(*elem) if isinstance(elem, tuple) else g.remove_vertices([elem])
        if isinstance(sep, tuple) and sep and sep[0] == "too few vertices":
            if len(h) > report.k:
                return False
            continue
        if kind == "vertex":
            sep = frozenset(sep)
            if len(sep) >= report.k or len(components(h.remove_vertices(sep))) < 2:
                return False
        else:
            cut = sum(m for _, _, m in sep)
            removed = h
            for u, v, m in sep:
                removed = removed.remove_edge(u, v, m)
            if cut >= report.k or len(components(removed)) < 2:
                return False
    if report.counterexample is not None and report.connected:
        c = report.counterexample
        if isinstance(c, frozenset):
            return bool(is_k_connected(g.subgraph(c), report.k))
        h = g.remove_edge(*c) if isinstance(c, tuple) else g.remove_vertices([c])
        return bool(_conn(h, report.k, kind))
    return True


@dataclass
class Census:
    k: int
    n: int
    degree_k: list
    small: list  # degree <= floor(3k/2) - 1
    small_bound: int
    ends: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "n": self.n,
            "degree_k": self.degree_k,
            "count_degree_k": len(self.degree_k),
            "small_bound": self.small_bound,
            "small": self.small,
            "count_small": len(self.small),
            "ends": self.ends,
        }


def degree_census(g: FiniteGraph, k: int) -> Census:
    bound = (3 * k) // 2 - 1
    order = vsorted(g.vertices)
    return Census(
        k,
        len(g),
        [v for v in order if g.degree(v) == k],
        [v for v in order if g.degree(v) <= bound],
        bound,
    )


@dataclass
class CycleVerdict:
    ok: bool
    checked: int
    violating: tuple | None
    applies: bool  # g is edge-minimally k-connected
    warning: str = ""

    def to_json(self) -> dict:
        return {"ok": self.ok, "checked": self.checked, "violating": list(self.violating) if self.violating else None,
                "theorem_applies": self.applies, "warning": self.warning}


def cycles_degree_k(g: FiniteGraph, k: int, max_len: int | None = None) -> CycleVerdict:
    """Does every cycle of length <= max_len contain a vertex of degree k?"""
    max_len = len(g) if max_len is None else max_len
    applies = check_minimality(g, k, "edge-min-kconn").verdict
    warning = "" if applies else "graph is not edge-minimally k-connected; the theorem does not apply"
    checked = 0
    for cyc in enumerate_cycles(g, max_len):
        checked += 1
        if not any(g.degree(v) == k for v in cyc):
            return CycleVerdict(False, checked, cyc, applies, warning)
    return CycleVerdict(True, checked, None, applies, warning)


# -- witnesses on presentations ------------------------------------------------

WITNESS_MODES = {
    # mode: (vertex degree test, end-degree kind)
    "vertex-min-kconn": (lambda d, k: d <= (3 * k) // 2 - 1, "vertex"),
    "edge-min-kedge": (lambda d, k: d == k, "edge"),
    "vertex-min-kedge": (lambda d, k: d == k, "vertex"),
}


@dataclass
class Witness:
    kind: str  # "vertex" | "end" | "not found at budget"
    mode: str
    k: int
    vertex: object = None
    degree: int | None = None
    end: str | None = None
    estimate: dict | None = None

    def to_json(self) -> dict:
        return {"kind": self.kind, "mode": self.mode, "k": self.k, "vertex": self.vertex, "degree": self.degree,
                "end": self.end, "estimate": self.estimate}


def small_degree_witness(p, k: int, mode: str, budget: int = 6, end_radius: int = 1) -> Witness:
    """A small-degree vertex or an end with certified small degree.

    Vertices of the ball of radius ``budget`` are scanned first, then the
    ends seen at ``end_radius``; an end counts only if its estimate has a
    certified upper bound meeting the threshold.
    """
    if mode not in WITNESS_MODES:
        raise GraphInputError(f"unknown witness mode {mode!r}; known: {', '.join(WITNESS_MODES)}")
    test, kind = WITNESS_MODES[mode]
    if isinstance(p, FiniteGraph):
        vs, deg = vsorted(p.vertices), p.degree
        pres = None
    else:
        b = ball(p, budget)
        vs = sorted(b.graph.vertices, key=lambda v: (b.levels[v], vkey(v)))
        deg = lambda v: len(p.nbrs(v))  # noqa: E731
        pres = p
    for v in vs:
        if test(deg(v), k):
            return Witness("vertex", mode, k, v, deg(v))
    if pres is None or pres.finite:
        return Witness("not found at budget", mode, k)
    est_fn = vertex_degree if kind == "vertex" else edge_degree
    for h in handles(pres, end_radius):
        est = est_fn(pres, h, budget)
        if est.upper != UNBOUNDED and est.upper <= k:
            return Witness("end", mode, k, end=h.to_spec(), estimate=est.to_json())
    return Witness("not found at budget", mode, k)


# -- greedy deletion --------------------------------------------------------------

SCHEDULES = {
    "infinite-side": ("vertex", lambda v: v.startswith("b") and v != "b0"),
    "x-vertices": ("vertex", lambda v: v.startswith("x.")),
    "odd-rungs": ("edge", lambda e: e[0][0] != e[1][0] and int(e[0][1:]) % 2 != 0),
}


def _window_ok(g: FiniteGraph, inner, k: int):
    """Every pair of inner vertices is joined by k disjoint paths in g."""
    inner = vsorted(v for v in inner if v in g)
    for u, v in combinations(inner, 2):
        if v in g.adj[u]:
            continue
        res = min_vertex_cut(g, {u}, {v})
        if res.size < k:
            return False, (u, v, res.size)
    return True, None


@dataclass
class DeletionTrace:
    schedule: str
    k: int
    steps: list
    final_components: int
    remaining: int

    def to_json(self) -> dict:
        return {"schedule": self.schedule, "k": self.k, "steps": self.steps,
                "final_components": self.final_components, "scheduled_in_window": self.remaining}


def greedy_deletion_trace(
    p: Presentation, k: int, schedule: str, budget: int = 6, inner: int = 2, steps: int | None = None
) -> DeletionTrace:
    """Delete scheduled elements of the window one at a time.

    After each step the inner ball is checked for k disjoint paths between
    all non-adjacent pairs; the final entry reports the components left once
    every scheduled element of the window is gone.
    """
    if schedule not in SCHEDULES:
        raise GraphInputError(f"unknown schedule {schedule!r}; known: {', '.join(SCHEDULES)}")
    kind, pick = SCHEDULES[schedule]
    b = ball(p, budget)
    g = b.graph
    inner_set = {v for v in g.vertices if b.levels[v] <= inner}

    def lv(x):
        return max(b.levels[y] for y in x) if isinstance(x, tuple) else b.levels[x]

    if kind == "vertex":
        items = sorted((v for v in g.vertices if pick(v)), key=lambda v: (lv(v), vkey(v)))
    else:
        items = sorted(((u, v) for u, v, _ in g.edges() if pick((u, v))), key=lambda e: (lv(e), vkey(e[0]), vkey(e[1])))
    items_n = items if steps is None else items[:steps]
    trace = []
    cur = g
    for i, x in enumerate(items_n):
        cur = cur.remove_vertices([x]) if kind == "vertex" else cur.remove_edge(*x)
        ok, bad = _window_ok(cur, inner_set - ({x} if kind == "vertex" else set()), k)
        trace.append({"step": i + 1, "deleted": list(x) if kind == "edge" else x, "window_k_connected": ok,
                      "violation": list(bad) if bad else None})
    final = g
    for x in items:
        final = final.remove_vertices([x]) if kind == "vertex" else final.remove_edge(*x)
    return DeletionTrace(schedule, k, trace, len(components(final)), len(items))


# -- exhaustive small-graph sweep ---------------------------------------------------

def _induced_connected(adj: tuple, mask: int) -> bool:
    if not mask:
        return False
    low = mask & -mask
    seen = frontier = low
    while frontier:
        nxt = 0
        f = frontier
        while f:
            b = f & -f
            nxt |= adj[b.bit_length() - 1]
            f ^= b
        nxt &= mask & ~seen
        seen |= nxt
        frontier = nxt
    return seen == mask


def mask_k_connected(adj: tuple, mask: int, k: int) -> bool:
    """Brute force: more than k vertices and no < k vertices disconnect."""
    verts = [i for i in range(len(adj)) if mask >> i & 1]
    if len(verts) < k + 1:
        return False
    for s in range(k):
        for combo in combinations(verts, s):
            m = mask
            for v in combo:
                m &= ~(1 << v)
            if not _induced_connected(adj, m):
                return False
    return True


def _without_edge(adj: tuple, u: int, v: int) -> tuple:
    out = list(adj)
    out[u] &= ~(1 << v)
    out[v] &= ~(1 << u)
    return tuple(out)


@dataclass
class SweepRecord:
    n: int
    adj: tuple
    k: int
    edge_min: bool
    vertex_min: bool
    induced_min: bool
    subgraph_min: bool
    degree_k: int
    small: int
    cycles_ok: bool


def _forest(adj: tuple, mask: int) -> bool:
    edges = sum(bin(adj[v] & mask).count("1") for v in range(len(adj)) if mask >> v & 1) // 2
    comps, rest = 0, mask
    while rest:
        low = rest & -rest
        seen = frontier = low
        while frontier:
            nxt = 0
            f = frontier
            while f:
                b = f & -f
                nxt |= adj[b.bit_length() - 1]
                f ^= b
            nxt &= mask & ~seen
            seen |= nxt
            frontier = nxt
        rest &= ~seen
        comps += 1
    return edges == bin(mask).count("1") - comps


def classify(adj: tuple, k: int) -> SweepRecord | None:
    """Minimality flags of a k-connected graph given by adjacency masks."""
    n = len(adj)
    full = (1 << n) - 1
    if not mask_k_connected(adj, full, k):
        return None
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if adj[u] >> v & 1]
    edge_min = all(not mask_k_connected(_without_edge(adj, u, v), full, k) for u, v in edges)
    vertex_min = all(not mask_k_connected(adj, full & ~(1 << v), k) for v in range(n))
    induced_min = vertex_min
    if vertex_min:
        for size in range(n - 2, k, -1):
            for combo in combinations(range(n), size):
                m = 0
                for v in combo:
                    m |= 1 << v
                if mask_k_connected(adj, m, k):
                    induced_min = False
                    break
            if not induced_min:
                break
    deg = [bin(a).count("1") for a in adj]
    big = 0
    for v in range(n):
        if deg[v] > k:
            big |= 1 << v
    return SweepRecord(
        n, adj, k, edge_min, vertex_min, induced_min, edge_min and induced_min,
        sum(1 for d in deg if d == k), sum(1 for d in deg if d <= (3 * k) // 2 - 1), _forest(adj, big),
    )


@dataclass
class SweepSummary:
    k: int
    n_max: int
    graphs: int
    k_connected: int
    edge_min: int
    vertex_min: int
    induced_min: int
    subgraph_min: int
    mader_violations: list
    cycle_violations: list
    hamidoune_violations: list
    implication_violations: list

    @property
    def ok(self) -> bool:
        return not (self.mader_violations or self.cycle_violations or self.hamidoune_violations
                    or self.implication_violations)

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        for key in ("mader_violations", "cycle_violations", "hamidoune_violations", "implication_violations"):
            out[key] = [list(x) for x in out[key]]
        out["ok"] = self.ok
        return out


def sweep(n_max: int = 8, k: int = 3, n_min: int = 1) -> SweepSummary:
    """Every connected graph on n_min..n_max vertices, up to isomorphism.

    Checks Mader's count (edge-minimal: >= n/2 vertices of degree k), the
    cycle property (edge-minimal: every cycle meets a degree-k vertex),
    Hamidoune's count (vertex-minimal: >= 2 vertices of degree
    <= floor(3k/2) - 1) and the implications between the modes.
    """
    counts = dict(graphs=0, k_connected=0, edge_min=0, vertex_min=0, induced_min=0, subgraph_min=0)
    mader, cyc, ham, imp = [], [], [], []
    for n in range(max(n_min, 1), n_max + 1):
        for adj in connected_graphs(n):
            counts["graphs"] += 1
            rec = classify(adj, k)
            if rec is None:
                continue
            counts["k_connected"] += 1
            for key, flag in (("edge_min", rec.edge_min), ("vertex_min", rec.vertex_min),
                              ("induced_min", rec.induced_min), ("subgraph_min", rec.subgraph_min)):
                counts[key] += flag
            if rec.edge_min and Fraction(rec.degree_k) < Fraction(n, 2):
                mader.append(adj)
            if rec.edge_min and not rec.cycles_ok:
                cyc.append(adj)
            if rec.vertex_min and rec.small < 2:
                ham.append(adj)
            if (rec.subgraph_min and not rec.edge_min) or (rec.induced_min and not rec.vertex_min):
                imp.append(adj)
    return SweepSummary(k, n_max, mader_violations=mader, cycle_violations=cyc, hamidoune_violations=ham,
                        implication_violations=imp, **counts)

