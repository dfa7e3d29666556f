"""Run every manifest claim of a gallery entry through the matching checker."""
from __future__ import annotations

from dataclasses import dataclass, field

from .connectivity import girth, is_k_connected
from .enddeg import UNBOUNDED, edge_degree, ratio_degree, relative_degree, vertex_degree
from .gallery import make
from .graph import FiniteGraph
from .minimality import _window_ok, check_minimality
from .minors import complete_minor
from .presentation import ball, handles
from .reduction import rayless_reduce

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class ClaimResult:
    prop: str
    expected: object
    status: str
    observed: object = None
    note: str = ""

    def to_json(self) -> dict:
        exp = list(self.expected) if isinstance(self.expected, tuple) else self.expected
        return {"prop": self.prop, "expected": exp, "status": self.status, "observed": self.observed, "note": self.note}


@dataclass
class ManifestReport:
    name: str
    params: dict
    results: list = field(default_factory=list)

    @property
    def status(self) -> str:
        st = {r.status for r in self.results}
        return FAIL if FAIL in st else INCONCLUSIVE if INCONCLUSIVE in st else PASS

    def to_json(self) -> dict:
        return {"name": self.name, "params": self.params, "status": self.status,
                "claims": [r.to_json() for r in self.results]}


def _interval(expected):
    if isinstance(expected, tuple):
        return expected
    return (expected, expected)


def _judge(lower, upper, expected) -> str:
    """Certified interval [lower, upper] against the claimed value/interval."""
    lo, hi = _interval(expected)
    up = None if upper == UNBOUNDED else upper
    if lo is not None and up is not None and up < lo:
        return FAIL
    if hi is not None and lower > hi:
        return FAIL
    ok_lo = lo is None or lower >= lo
    ok_hi = hi is None or (up is not None and up <= hi)
    return PASS if ok_lo and ok_hi else INCONCLUSIVE


def _degrees(obj, r):
    if isinstance(obj, FiniteGraph):
        return [obj.degree(v) for v in obj.vertices]
    b = ball(obj, r)
    return [len(obj.nbrs(v)) for v in b.graph.vertices]


def _small_ball(p, limit=20):
    r, best = 0, None
    while True:
        b = ball(p, r)
        if len(b.graph) > limit:
            return best
        best = b.graph
        r += 1
        if r > 50:
            return best


def _check(obj, claim) -> ClaimResult:
    prop, exp, bud = claim.prop, claim.expected, claim.budget
    res = lambda st, obs=None, note="": ClaimResult(prop, exp, st, obs, note or claim.note)  # noqa: E731
    if prop == "degrees":
        seen = sorted(set(_degrees(obj, bud)))
        return res(PASS if seen == sorted(set(exp)) else FAIL, seen)
    if prop in ("min_degree", "degrees_between"):
        ds = _degrees(obj, bud)
        lo, hi = exp
        ok = min(ds) >= lo and (hi is None or max(ds) <= hi)
        return res(PASS if ok else FAIL, [min(ds), max(ds)])
    if prop == "end_count":
        n = len(handles(obj, bud))
        return res(PASS if n == exp else FAIL, n, "ends visible at radius " + str(bud))
    if prop in ("end_vertex_degree", "end_edge_degree", "ratio_degree", "relative_degree"):
        fn = {"end_vertex_degree": vertex_degree, "end_edge_degree": edge_degree,
              "ratio_degree": ratio_degree, "relative_degree": relative_degree}[prop]
        sample = handles(obj, 2 if prop == "end_vertex_degree" else 1)
        statuses, obs = [], []
        for h in sample[:6]:
            est = fn(obj, h, bud)
            statuses.append(_judge(est.lower, est.upper, exp))
            obs.append([h.to_spec(), str(est.lower), str(est.upper)])
        st = FAIL if FAIL in statuses else INCONCLUSIVE if INCONCLUSIVE in statuses else PASS
        return res(st, obs)
    if prop == "girth":
        gv = girth(ball(obj, bud).graph)
        return res(PASS if gv == exp else INCONCLUSIVE, gv, "girth of the window")
    if prop == "no_k5_minor":
        g = _small_ball(obj, exp)
        mr = complete_minor(g, 5)
        st = PASS if mr.status == "none" else FAIL if mr.found else INCONCLUSIVE
        return res(st, {"window_vertices": len(g), "search": mr.status})
    if prop == "window_k_connected":
        b = ball(obj, bud + 3)
        ok, bad = _window_ok(b.graph, {v for v in b.graph.vertices if b.levels[v] <= bud}, exp)
        return res(PASS if ok else FAIL, bad)
    if prop == "rayless_reduce":
        out = rayless_reduce(obj, exp, step_budget=bud)
        ok = getattr(out, "ok", False) and out.verify(obj)
        return res(PASS if ok else INCONCLUSIVE, len(getattr(out, "vertices", ())))
    if prop == "k_connected":
        return res(PASS if is_k_connected(obj, exp) else FAIL)
    if prop == "vertex_minimal":
        return res(PASS if check_minimality(obj, exp, "vertex-min-kconn").verdict else FAIL)
    if prop == "edge_minimal":
        return res(PASS if check_minimality(obj, exp, "edge-min-kconn").verdict else FAIL)
    return res(INCONCLUSIVE, None, "no checker for this claim")


def verify_manifest(name: str, params: dict | None = None, budget: int | None = None) -> ManifestReport:
    """``budget`` overrides every claim's own radius budget when given."""
    obj, man = make(name, params)
    report = ManifestReport(name, man.params)
    for claim in man.claims:
        if budget is not None and claim.budget:
            claim = type(claim)(claim.prop, claim.expected, claim.note, budget, claim.params)
        report.results.append(_check(obj, claim))
    return report
