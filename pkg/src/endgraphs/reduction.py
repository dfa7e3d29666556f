"""The two constructive reductions, the threshold table and minor pipelines.

Both reductions are semi-decision procedures on infinite inputs: they either
stop with a finite subgraph whose degrees are re-counted from the
presentation, or they run out of steps and return the evidence that the
proof's König argument would turn into a ray or a descending chain.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .graph import FiniteGraph, GraphInputError, components, vkey, vsorted
from .minors import MinorResult, complete_minor, verify_branch_sets
from .presentation import (
    Presentation,
    UndecidedComponent,
    components_outside,
    explore,
    finite_presentation,
    window_graph,
)


def _q(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class ReductionCert:
    """A finite induced subgraph with its measured degrees."""

    kind: str  # rayless | relative
    vertices: frozenset
    min_degree: int
    average_degree: Fraction
    threshold: Fraction
    transcript: tuple = ()

    @property
    def ok(self) -> bool:
        if self.kind == "rayless":
            return self.min_degree >= self.threshold
        return self.average_degree >= self.threshold

    def graph(self, p: Presentation) -> FiniteGraph:
        return window_graph(p, self.vertices)

    def verify(self, p: Presentation) -> bool:
        """Re-induce from the presentation and recount."""
        g = self.graph(p)
        if len(g) == 0:
            return False
        avg = Fraction(2 * g.num_edges(), len(g))
        return g.min_degree() == self.min_degree and avg == self.average_degree and self.ok

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "vertices": vsorted(self.vertices),
            "min_degree": self.min_degree,
            "average_degree": _q(self.average_degree),
            "threshold": _q(self.threshold),
            "ok": self.ok,
            "transcript": list(self.transcript),
        }


@dataclass(frozen=True)
class BudgetExhausted:
    """No finite subgraph within the step budget; ``evidence`` explains why."""

    kind: str
    steps: int
    evidence: tuple
    transcript: tuple = ()
    reason: str = "budget exhausted"

    ok = False

    def to_json(self) -> dict:
        return {"kind": self.kind, "status": self.reason, "steps": self.steps,
                "evidence": list(self.evidence), "transcript": list(self.transcript)}


def _measure(p: Presentation, verts) -> tuple[int, Fraction]:
    g = window_graph(p, verts)
    return g.min_degree(), Fraction(2 * g.num_edges(), len(g))


# -- rayless reduction -----------------------------------------------------------

def _degree_into(p: Presentation, v, u_set: set, top: int) -> int:
    nb = p.nbrs(v) if p.locally_finite else p.neighbors_upto(v, top)
    return sum(1 for u in nb if u in u_set)


def _new_neighbours(p: Presentation, v, u_set: set, need: int, reach: int = 64) -> list:
    """The first ``need`` neighbours of v outside U, in (level, id) order."""
    if p.locally_finite:
        out = [u for u in dict.fromkeys(p.nbrs(v)) if u not in u_set]
        out.sort(key=lambda u: (p.lvl(u), vkey(u)))
        return out[:need]
    r = p.lvl(v) + 1
    while True:
        out = [u for u in dict.fromkeys(p.neighbors_upto(v, r)) if u not in u_set]
        if len(out) >= need or r > p.lvl(v) + reach + need:
            out.sort(key=lambda u: (p.lvl(u), vkey(u)))
            return out[:need]
        r += 1


def rayless_reduce(p: Presentation, m: int, step_budget: int = 50, start=None):
    """Grow S_0, S_1, ... where each v in S_{i-1} takes max(0, m - d_U(v)) new
    neighbours; stop when some S_i is empty."""
    if m < 0:
        raise GraphInputError("m must be >= 0")
    s0 = start if start is not None else p.root
    if m == 0:
        return ReductionCert("rayless", frozenset([s0]), 0, Fraction(0), Fraction(0), ({"S": [s0]},))
    u_set = {s0}
    layer = [s0]
    transcript = [{"i": 0, "S": [s0]}]
    for i in range(1, step_budget + 1):
        top = max(p.lvl(v) for v in u_set) + 1
        new: dict = {}
        picks = {}
        for v in vsorted(layer):
            need = max(0, m - _degree_into(p, v, u_set, top))
            got = _new_neighbours(p, v, u_set, need)
            if len(got) < need:
                return BudgetExhausted(
                    "rayless", i, (f"vertex {v} has fewer than {m} neighbours",), tuple(transcript),
                    reason="hypothesis violated",
                )
            picks[v] = got
            for u in got:
                new.setdefault(u, None)
        layer = vsorted(new)
        transcript.append({"i": i, "S": layer, "picks": {v: picks[v] for v in vsorted(picks) if picks[v]}})
        if not layer:
            verts = frozenset(u_set)
            md, avg = _measure(p, verts)
            return ReductionCert("rayless", verts, md, avg, Fraction(m), tuple(transcript))
        u_set |= set(layer)
    layers = tuple(len(t["S"]) for t in transcript)
    return BudgetExhausted("rayless", step_budget, layers, tuple(transcript))


def layers_linked(p: Presentation, transcript) -> bool:
    """Every vertex of S_i has a neighbour in S_{i-1} (the ray argument)."""
    for prev, cur in zip(transcript, transcript[1:]):
        before = set(prev["S"])
        top = max((p.lvl(v) for v in before), default=0) + 1
        for v in cur["S"]:
            nb = p.nbrs(v) if p.locally_finite else p.neighbors_upto(v, max(top, p.lvl(v) + 1))
            if not any(u in before for u in nb):
                return False
    return True


# -- relative reduction ------------------------------------------------------------

@dataclass(frozen=True)
class _Group:
    """One C in C_i: infinite components of G - X glued along shared attachments."""

    reps: tuple
    attachment: frozenset  # = ∂_v C, inside N(S)
    body: frozenset  # window part of the infinite components
    edges: int  # |∂_e C|

    @property
    def ratio(self) -> Fraction:
        return Fraction(self.edges, len(self.attachment))


def _step(p: Presentation, s: frozenset):
    """One application of the update rule. Returns (record, S_next, groups, D)."""
    nbhd = frozenset(u for v in s for u in p.nbrs(v) if u not in s)
    x = s | nbhd
    comps = components_outside(p, x, strict=True)
    inf = [c for c in comps if c.infinite]
    fin = frozenset(v for c in comps if not c.infinite for v in c.window)
    # glue infinite components sharing an attachment vertex
    parent = list(range(len(inf)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    owner: dict = {}
    for i, c in enumerate(inf):
        for a in c.attachment:
            if a in owner:
                parent[find(i)] = find(owner[a])
            else:
                owner[a] = i
    buckets: dict = {}
    for i in range(len(inf)):
        buckets.setdefault(find(i), []).append(inf[i])
    groups = []
    for members in buckets.values():
        att = frozenset(a for c in members for a in c.attachment)
        body = frozenset(v for c in members for v in c.window)
        inside = att | body
        edges = sum(1 for a in att for u in p.nbrs(a) if u not in inside)
        groups.append(_Group(tuple(sorted((c.rep for c in members), key=vkey)), att, body, edges))
    groups.sort(key=lambda g: vkey(g.reps[0]))
    covered = frozenset(a for g in groups for a in g.attachment)
    return x, nbhd, fin, groups, covered


def _record(i, k, s, nbhd, fin, groups, d_idx, s_next) -> dict:
    return {
        "i": i,
        "k": _q(k),
        "S": vsorted(s),
        "N": vsorted(nbhd),
        "F": vsorted(fin),
        "C": [
            {"reps": list(g.reps), "boundary_v": vsorted(g.attachment), "boundary_e": g.edges, "ratio": _q(g.ratio)}
            for g in groups
        ],
        "D": d_idx,
        "S_next": vsorted(s_next),
    }


def relative_reduce(p: Presentation, k, step_budget: int = 30, start=None):
    """S_{i+1} = S_i ∪ F_i ∪ (N(S_i) minus ⋃C_i) ∪ ⋃_{D in D_i} ∂_v D; stop when D_i is empty."""
    if not p.locally_finite:
        raise GraphInputError(f"{p.name}: the relative reduction needs a locally finite presentation")
    k = Fraction(k)
    s = frozenset([start if start is not None else p.root])
    transcript = []
    d_history = []
    for i in range(step_budget):
        try:
            x, nbhd, fin, groups, covered = _step(p, s)
        except UndecidedComponent as exc:
            return BudgetExhausted("relative", i, (str(exc),), tuple(transcript), reason="undecided component")
        d_idx = [j for j, g in enumerate(groups) if g.ratio < k]
        s_next = s | fin | (nbhd - covered) | frozenset(a for j in d_idx for a in groups[j].attachment)
        transcript.append(_record(i, k, s, nbhd, fin, groups, d_idx, s_next))
        if not d_idx:
            verts = s_next | frozenset(u for v in s_next for u in p.nbrs(v))
            md, avg = _measure(p, verts)
            return ReductionCert("relative", verts, md, avg, k, tuple(transcript))
        d_history.append((x, [groups[j] for j in d_idx]))
        s = s_next
    return BudgetExhausted("relative", step_budget, tuple(_d_chain(p, d_history)), tuple(transcript))


def _d_chain(p: Presentation, history) -> list:
    """Follow one D backwards through the steps by containment."""
    if not history:
        return []
    x_last, ds = history[-1]
    cur = ds[0]
    chain = [cur]
    for x_prev, prev_ds in reversed(history[:-1]):
        top = max(p.lvl(v) for v in x_prev) + p.escape_margin + 1
        probe = cur.reps[0]
        reach = explore(p, [probe], x_prev, max(top, p.lvl(probe)))
        host = next((d for d in prev_ds if reach & (d.body | d.attachment)), None)
        if host is None:
            break
        chain.append(host)
        cur = host
    chain.reverse()
    return [{"reps": list(d.reps), "boundary_v": vsorted(d.attachment), "boundary_e": d.edges, "ratio": _q(d.ratio)}
            for d in chain]


def replay_transcript(p: Presentation, transcript) -> bool:
    """Recompute every S_{i+1} from S_i with plain finite-graph routines."""
    for rec in transcript:
        k = Fraction(rec["k"])
        s = frozenset(rec["S"])
        nbhd = {u for v in s for u in p.nbrs(v)} - s
        x = s | nbhd
        top = max(p.lvl(v) for v in x) + p.escape_margin + 1
        seeds = {u for v in nbhd for u in p.nbrs(v)} - x
        win = explore(p, seeds, x, top)
        w = window_graph(p, win | x)
        outside = w.vertices - x
        comps = components(w, within=outside)
        is_inf = [any(p.lvl(v) >= top for v in c) for c in comps]
        finite = {v for c, f in zip(comps, is_inf) if not f for v in c}
        inf_union = {v for c, f in zip(comps, is_inf) if f for v in c}
        att = {u for v in inf_union for u in w.adj[v] if u in x}
        glue = components(w, within=inf_union | att)
        d_bound = set()
        covered = set()
        for gset in glue:
            bv = gset & att
            covered |= bv
            be = sum(1 for a in bv for u in p.nbrs(a) if u not in gset)
            if not bv:
                return False
            if Fraction(be, len(bv)) < k:
                d_bound |= bv
        expect = s | finite | (nbhd - covered) | d_bound
        if expect != set(rec["S_next"]):
            return False
    return True


# -- thresholds -----------------------------------------------------------------------

C1_DEFAULT = 1.0  # illustrative; not derived from any theorem
C2_DEFAULT = 1.0  # illustrative; not derived from any theorem


def thresholds(k: int, c1: float = C1_DEFAULT, c2: float = C2_DEFAULT) -> dict:
    if k < 1:
        raise GraphInputError("k must be >= 1")
    return {
        "k": k,
        "f1": c1 * k * math.sqrt(math.log(k)),
        "f2": c2 * k * k,
        "c1": c1,
        "c2": c2,
        "constants": "illustrative placeholders" if (c1, c2) == (C1_DEFAULT, C2_DEFAULT) else "user supplied",
        "girth": 8 * k + 3,
        "hcs_vertex": 2 * k * (k + 1),
        "hcs_end": 2 * k * (k + 3),
        "lick": Fraction(3 * k, 2) - 1,
        "mader": 2 ** (k - 2) if k >= 2 else 0,
    }


# -- minor pipeline ---------------------------------------------------------------------

@dataclass(frozen=True)
class PipelineResult:
    status: str  # minor found | reduction obtained, minor search exhausted | ... | hypotheses not certified
    r: int
    reduction: object
    minor: MinorResult | None = None
    stages: tuple = field(default=())

    @property
    def certified(self) -> bool:
        return self.minor is not None and self.minor.found

    def verify(self, p: Presentation) -> bool:
        if not self.certified:
            return False
        if isinstance(self.reduction, ReductionCert):
            if not self.reduction.verify(p):
                return False
            g = self.reduction.graph(p)
        else:
            g = self.reduction
        return len(self.minor.branch_sets) == self.r and verify_branch_sets(g, self.minor.branch_sets)

    def to_json(self) -> dict:
        red = self.reduction.to_json() if hasattr(self.reduction, "to_json") else {"vertices": len(self.reduction)}
        minor = None
        if self.minor is not None:
            minor = {"status": self.minor.status, "nodes": self.minor.nodes,
                     "branch_sets": [vsorted(b) for b in self.minor.branch_sets]}
        return {"status": self.status, "r": self.r, "stages": list(self.stages), "reduction": red, "minor": minor}


def force_minor_pipeline(p, r: int, budget: int = 30, m: int | None = None, k=None,
                         minor_budget: int = 200_000, max_r: int = 5) -> PipelineResult:
    """Reduce to a finite subgraph, then search it for a K^r minor.

    Default thresholds use Mader's bound: minimum or average degree
    2^(r-2) forces K^r in finite graphs.
    """
    if r < 1 or r > max_r:
        raise GraphInputError(f"r must lie in [1, {max_r}] for bounded minor search")
    if isinstance(p, FiniteGraph):
        p = finite_presentation(p)
    if p.finite:
        g = window_graph(p, explore(p, p.roots, set(), 10 ** 9))
        res = complete_minor(g, r, minor_budget)
        status = "minor found" if res.found else f"finite input, minor search {res.status}"
        return PipelineResult(status, r, g, res, ("finite input",))
    mader = thresholds(r)["mader"] if r >= 2 else 1
    if not p.locally_finite:
        m = m if m is not None else max(1, mader)
        red = rayless_reduce(p, m, budget)
        stage = f"rayless reduction, m={m}"
    else:
        k = Fraction(k) if k is not None else Fraction(max(1, mader))
        red = relative_reduce(p, k, budget)
        stage = f"relative reduction, k={_q(k)}"
    if not isinstance(red, ReductionCert) or not red.verify(p):
        return PipelineResult("hypotheses not certified", r, red, None, (stage, "no verified finite subgraph"))
    g = red.graph(p)
    res = complete_minor(g, r, minor_budget)
    if res.found and verify_branch_sets(g, res.branch_sets):
        return PipelineResult("minor found", r, red, res, (stage, f"K^{r} search on {len(g)} vertices"))
    return PipelineResult(f"reduction obtained, minor search {res.status}", r, red, res, (stage,))
