"""Constructors for the example graphs, each with a manifest of claimed properties.

Every infinite family is a :class:`Presentation` whose levels change by at
most one along edges. Escape margins are chosen per family; the docstring of
each builder says why the margin is enough.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import count

from .graph import FiniteGraph, GraphInputError
from .presentation import Presentation, finite_presentation


@dataclass(frozen=True)
class Claim:
    prop: str
    expected: object  # a value, or a (lo, hi) pair with None for open ends
    note: str = ""
    budget: int = 0
    params: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Manifest:
    name: str
    params: dict
    claims: tuple


# -- helpers ---------------------------------------------------------------

def _addr(s: str) -> list[int]:
    return [int(x) for x in s.split(".")[1:]]


def _mk(digits) -> str:
    return ".".join(["t"] + [str(d) for d in digits])


def _need(params: dict, key: str, lo: int, hi: int | None = None) -> int:
    if key not in params:
        raise GraphInputError(f"missing parameter {key!r}")
    v = params[key]
    if not isinstance(v, int) or isinstance(v, bool):
        raise GraphInputError(f"parameter {key!r} must be an integer")
    if v < lo or (hi is not None and v > hi):
        rng = f"[{lo}, {hi}]" if hi is not None else f">= {lo}"
        raise GraphInputError(f"parameter {key}={v} outside supported range {rng}")
    return v


def _tree_children(digits: list, root_kids: int, kids: int) -> list:
    n = root_kids if not digits else kids
    return [digits + [c] for c in range(n)]


# -- one-dimensional families ---------------------------------------------

def double_ray(params: dict) -> Presentation:
    """Levels |j|; G - B_r is two tails, so margin 1 is sound."""
    def nb(v):
        j = int(v)
        return [str(j - 1), str(j + 1)]

    return Presentation("double_ray", dict(params), ("0",), nb, lambda v: abs(int(v)))


def ray(params: dict) -> Presentation:
    def nb(v):
        j = int(v)
        return [str(j + 1)] if j == 0 else [str(j - 1), str(j + 1)]

    return Presentation("ray", dict(params), ("0",), nb, lambda v: int(v))


def r2(params: dict) -> Presentation:
    """Square of the double ray; level ceil(|j|/2) keeps edges Lipschitz."""
    def nb(v):
        j = int(v)
        return [str(j + d) for d in (-2, -1, 1, 2)]

    return Presentation("R2", dict(params), ("0",), nb, lambda v: (abs(int(v)) + 1) // 2)


def ladder(params: dict) -> Presentation:
    """Double ladder. ``rungs``: 'all' (D), 'none' (all rungs deleted), 'even'."""
    rungs = params.get("rungs", "all")
    if rungs not in ("all", "none", "even"):
        raise GraphInputError("rungs must be 'all', 'none' or 'even'")

    def has_rung(i):
        return rungs == "all" or (rungs == "even" and i % 2 == 0)

    def nb(v):
        side, i = v[0], int(v[1:])
        out = [f"{side}{i - 1}", f"{side}{i + 1}"]
        if has_rung(i):
            out.append(("y" if side == "x" else "x") + str(i))
        return out

    roots = ("x0", "y0") if rungs == "none" else ("x0",)
    return Presentation("ladder", {"rungs": rungs}, roots, nb, lambda v: abs(int(v[1:])))


def powered_ladder(params: dict) -> Presentation:
    """Two k-th powers of a double ray joined by the rungs at even indices."""
    k = _need(params, "k", 1, 6)

    def nb(v):
        side, i = v[0], int(v[1:])
        out = [f"{side}{i + d}" for d in range(-k, k + 1) if d]
        if i % 2 == 0:
            out.append(("y" if side == "x" else "x") + str(i))
        return out

    return Presentation("Dk", {"k": k}, ("x0",), nb, lambda v: -(-abs(int(v[1:])) // k))


# -- trees and tree-like families -------------------------------------------

def regular_tree(params: dict) -> Presentation:
    """k-regular tree; components of G - B_r are subtrees, margin 1."""
    k = _need(params, "k", 2, 8)

    def nb(v):
        d = _addr(v)
        out = [_mk(c) for c in _tree_children(d, k, k - 1)]
        if d:
            out.append(_mk(d[:-1]))
        return out

    return Presentation("T", {"k": k}, ("t",), nb, lambda v: v.count("."))


def _level_pos(d: list, k: int) -> tuple[int, int]:
    """Planar (address) position of a vertex on its level, and level size."""
    n = len(d)
    size = k * (k - 1) ** (n - 1)
    pos = d[0]
    for x in d[1:]:
        pos = pos * (k - 1) + x
    return pos, size


def _pos_addr(pos: int, n: int, k: int) -> list:
    d = []
    for _ in range(n - 1):
        d.append(pos % (k - 1))
        pos //= k - 1
    d.append(pos)
    return d[::-1]


def _gk(k: int, prune: bool) -> Presentation:
    def keep(d, e):
        if not prune:
            return True
        i = len(d)
        j0 = i - k + 2
        if j0 <= 0:
            return True  # the range of levels contains the root
        return d[:j0] == e[:j0]

    def nb(v):
        d = _addr(v)
        out = [_mk(c) for c in _tree_children(d, k, k - 1)]
        if d:
            out.append(_mk(d[:-1]))
            pos, size = _level_pos(d, k)
            for q in ((pos - 1) % size, (pos + 1) % size):
                e = _pos_addr(q, len(d), k)
                if keep(d, e):
                    out.append(_mk(e))
        return out

    name = "Gp" if prune else "G"
    margin = max(1, k - 2) if prune else 1
    return Presentation(name, {"k": k}, ("t",), nb, lambda v: v.count("."), escape_margin=margin)


def g_k(params: dict) -> Presentation:
    """Regular tree plus a spanning cycle on every level, in address order.

    G - B_r is connected through the cycle at level r + 1, so margin 1 is sound.
    """
    return _gk(_need(params, "k", 3, 6), prune=False)


def g_k_pruned(params: dict) -> Presentation:
    """Level-cycle edges kept only between vertices with a common ancestor
    at most k - 2 levels up.

    Subtrees below two level-(r+1) vertices are joined only by cycle edges at
    levels <= r + k - 2, so every merge is visible with margin k - 2.
    """
    return _gk(_need(params, "k", 3, 6), prune=True)


def g_k_dprime(params: dict) -> Presentation:
    """Tree with k children everywhere; for every x and consecutive children
    v_j, v_{j+1} of x a new vertex joined to all their children.

    Helper vertices sit on the level of their neighbours. Components of
    G - B_r are the groups below one level-(r-1) vertex and never merge
    deeper, so margin 1 is sound.
    """
    k = _need(params, "k", 2, 6)

    def nb(v):
        if v.startswith("w"):
            body, j = v[2:].rsplit(".", 1)
            x, j = _addr(body), int(j)
            return [_mk(x + [c, m]) for c in (j, j + 1) for m in range(k)]
        d = _addr(v)
        out = [_mk(d + [c]) for c in range(k)]
        if d:
            out.append(_mk(d[:-1]))
        if len(d) >= 2:
            x, c = d[:-2], d[-2]
            if c >= 1:
                out.append(f"w.{_mk(x)}.{c - 1}")
            if c <= k - 2:
                out.append(f"w.{_mk(x)}.{c}")
        return out

    def level(v):
        if v.startswith("w"):
            body = v[2:].rsplit(".", 1)[0]
            return body.count(".") + 2
        return v.count(".")

    return Presentation("Gpp", {"k": k}, ("t",), nb, level)


def blob_tree(params: dict) -> Presentation:
    """T_r(k): a K^k for every vertex of the r-regular tree, complete joins
    along tree edges. Components are subtrees of blobs; margin 1."""
    r = _need(params, "r", 2, 6)
    k = _need(params, "k", 1, 6)

    def nb(v):
        a, j = v.split(":")
        d, j = _addr(a), int(j)
        out = [f"{a}:{i}" for i in range(k) if i != j]
        near = [_mk(c) for c in _tree_children(d, r, r - 1)]
        if d:
            near.append(_mk(d[:-1]))
        out += [f"{b}:{i}" for b in near for i in range(k)]
        return out

    return Presentation("Tr", {"r": r, "k": k}, ("t:0",), nb, lambda v: v.split(":")[0].count("."))


def clique_tree(params: dict) -> Presentation:
    """Every vertex has r*k children, which span r disjoint copies of K^k.

    Components of G - B_r are one sibling clique plus the subtrees below it;
    margin 1.
    """
    r = _need(params, "r", 1, 4)
    k = _need(params, "k", 1, 5)
    n = r * k

    def nb(v):
        d = _addr(v)
        out = [_mk(d + [c]) for c in range(n)]
        if d:
            par, c = d[:-1], d[-1]
            out.append(_mk(par))
            blk = c // k
            out += [_mk(par + [blk * k + i]) for i in range(k) if blk * k + i != c]
        return out

    return Presentation("edgemin", {"r": r, "k": k}, ("t",), nb, lambda v: v.count("."))


def tree_path_product(params: dict) -> Presentation:
    """T_r x P_{k+1}; components of G - B_r are products of subtrees; margin 1."""
    r = _need(params, "r", 2, 6)
    k = _need(params, "k", 1, 5)

    def nb(v):
        a, m = v.split("|")
        d, m = _addr(a), int(m)
        out = [f"{_mk(c)}|{m}" for c in _tree_children(d, r, r - 1)]
        if d:
            out.append(f"{_mk(d[:-1])}|{m}")
        out += [f"{a}|{x}" for x in (m - 1, m + 1) if 0 <= x <= k]
        return out

    return Presentation("strongex", {"r": r, "k": k}, ("t|0",), nb, lambda v: v.split("|")[0].count("."))


# -- product / ladder-like families -----------------------------------------

def y_graph(params: dict) -> Presentation:
    """Y(l): copies of the subdivided claw stacked along a ray; level = copy."""
    l = _need(params, "l", 1, 6)

    def nb(v):
        parts = v.split(".")
        i = int(parts[0])
        rest = ".".join(parts[1:])
        out = [f"{i + 1}.{rest}"]
        if i > 0:
            out.append(f"{i - 1}.{rest}")
        if rest == "c":
            out += [f"{i}.{a}.1" for a in range(3)]
        else:
            a, m = int(parts[1]), int(parts[2])
            out.append(f"{i}.c" if m == 1 else f"{i}.{a}.{m - 1}")
            if m < l:
                out.append(f"{i}.{a}.{m + 1}")
        return out

    return Presentation("Y", {"l": l}, ("0.c",), nb, lambda v: int(v.split(".")[0]))


def j_graph(params: dict) -> Presentation:
    """J_k on [2k-1] x Z; level |j|; two tails, margin 1."""
    k = _need(params, "k", 2, 8)
    width = 2 * k - 1

    def nb(v):
        i, j = (int(x) for x in v.split(","))
        out = [f"{x},{j}" for x in range(1, width + 1) if x % 2 != i % 2]
        if i % 2 == 1:
            out += [f"{i},{j - 1}", f"{i},{j + 1}"]
        return out

    return Presentation("J", {"k": k}, ("1,0",), nb, lambda v: abs(int(v.split(",")[1])))


def chain(params: dict, kind: str) -> Presentation:
    """Copies of K^k along a ray; 'a' joins v_1 to v_1 and v_2 of the next
    copy, 'b' joins every v_j to the next v_j. Level = copy index."""
    k = _need(params, "k", 2, 8)

    def nb(v):
        i, j = (int(x) for x in v.split("."))
        out = [f"{i}.{x}" for x in range(1, k + 1) if x != j]
        if kind == "a":
            if j == 1:
                out += [f"{i + 1}.1", f"{i + 1}.2"]
            if i > 0 and j in (1, 2):
                out.append(f"{i - 1}.1")
        else:
            out.append(f"{i + 1}.{j}")
            if i > 0:
                out.append(f"{i - 1}.{j}")
        return out

    return Presentation(f"chain_{kind}", {"k": k}, ("0.1",), nb, lambda v: int(v.split(".")[0]))


def girth_graph(params: dict) -> Presentation:
    """H_g: cycles of length g^n (level n - 1), vertex t of one cycle joined
    to vertex g*t of the next. One component outside every ball; margin 1."""
    g = _need(params, "g", 3, 6)

    def nb(v):
        n, t = (int(x) for x in v.split("."))
        size = g ** n
        out = [f"{n}.{(t - 1) % size}", f"{n}.{(t + 1) % size}", f"{n + 1}.{g * t}"]
        if n >= 2 and t % g == 0:
            out.append(f"{n - 1}.{t // g}")
        return out

    return Presentation("H", {"g": g}, ("1.0",), nb, lambda v: int(v.split(".")[0]) - 1)


def grid(params: dict) -> Presentation:
    """N x N (level x + y) or [cols] x N (level y)."""
    cols = params.get("cols")
    if cols is not None:
        cols = _need(params, "cols", 1, 12)

    def nb(v):
        x, y = (int(a) for a in v.split(","))
        out = []
        for dx, dy in ((-1, 0), (1, 0), (0, -1), (0, 1)):
            a, b = x + dx, y + dy
            if a < 0 or b < 0 or (cols is not None and a >= cols):
                continue
            out.append(f"{a},{b}")
        return out

    if cols is None:
        level = lambda v: sum(int(a) for a in v.split(","))  # noqa: E731
    else:
        level = lambda v: int(v.split(",")[1])  # noqa: E731
    return Presentation("grid", {"cols": cols}, ("0,0",), nb, level)


# -- identification patterns ---------------------------------------------------

def hat_h(params: dict) -> Presentation:
    """l double rays; at every index i, l/k copies of O_{k,4} whose first and
    last K^{k/2} are the i-th ray vertices.

    Schedule: slot s at index i is ray (s + i*k/2) mod l, so consecutive
    indices overlap by half a copy and every pair of rays is linked again and
    again in both directions. Level |i|; margin 1.
    """
    l = _need(params, "l", 2, 16)
    k = _need(params, "k", 2, 8)
    if k % 2 or l % k or l < k:
        raise GraphInputError("hat-H needs k even, k dividing l and l >= k")
    h = k // 2

    def part_ids(i, c, part):
        if part in (0, 3):
            base = c * k + (0 if part == 0 else h)
            return [f"r{(base + m + i * h) % l}.{i}" for m in range(h)]
        return [f"o{i}.{c}.{part}.{m}" for m in range(h)]

    def ring(i, c, part, me):
        out = [u for u in part_ids(i, c, part) if u != me]
        for q in ((part - 1) % 4, (part + 1) % 4):
            out += part_ids(i, c, q)
        return out

    def nb(v):
        if v[0] == "r":
            j, i = (int(x) for x in v[1:].split("."))
            s = (j - i * h) % l
            c, t = divmod(s, k)
            part = 0 if t < h else 3
            return [f"r{j}.{i - 1}", f"r{j}.{i + 1}"] + ring(i, c, part, v)
        i, c, part, m = (int(x) for x in v[1:].split("."))
        return ring(i, c, part, v)

    def level(v):
        return abs(int(v[1:].split(".")[1] if v[0] == "r" else v[1:].split(".")[0]))

    return Presentation("hatH", {"l": l, "k": k}, ("r0.0",), nb, level)


def large_end_degree(params: dict) -> Presentation:
    """Copies of K_{k,k-2} along Z whose big classes are identified with the
    vertices of l double rays.

    Ray vertex (j, p) has global index g = p*l + (j - p mod l), and copy
    g // k owns indices [qk, qk + k). The shift by p makes every pair of rays
    meet in a common copy unboundedly often in both directions. Level |p|
    for ray vertices and the least level of its neighbours for small-class
    vertices; margin 1.
    """
    k = _need(params, "k", 3, 6)
    l = _need(params, "l", k + 1, 16)

    def ray_of(g):
        p, s = divmod(g, l)
        return f"r{(s + p) % l}.{p}"

    def nb(v):
        if v[0] == "r":
            j, p = (int(x) for x in v[1:].split("."))
            g = p * l + (j - p) % l
            q = g // k
            return [f"r{j}.{p - 1}", f"r{j}.{p + 1}"] + [f"b{q}.{m}" for m in range(k - 2)]
        q = int(v[1:].split(".")[0])
        return [ray_of(g) for g in range(q * k, q * k + k)]

    def level(v):
        if v[0] == "r":
            return abs(int(v[1:].split(".")[1]))
        q = int(v[1:].split(".")[0])
        return min(abs(g // l) for g in range(q * k, q * k + k))

    return Presentation("LargeEndDeg", {"k": k, "l": l}, ("r0.0",), nb, level)


def greedy_vdel(params: dict) -> Presentation:
    """k copies of the ceil(k/2)-th power of a double ray plus a vertex x_i
    joined to the i-th vertex of every copy. Level ceil(|i|/p); margin 1."""
    k = _need(params, "k", 2, 6)
    p = -(-k // 2)

    def nb(v):
        a, i = v.split(".")
        i = int(i)
        if a == "x":
            return [f"{c}.{i}" for c in range(k)]
        return [f"{a}.{i + d}" for d in range(-p, p + 1) if d] + [f"x.{i}"]

    return Presentation("greedyVdel", {"k": k}, ("0.0",), nb, lambda v: -(-abs(int(v.split(".")[1])) // p))


def k_aleph(params: dict) -> Presentation:
    """K_{k,aleph_0}: a_0..a_{k-1} on level 1, b_i on level i, root b_0.

    Not locally finite; only the rayless reduction consumes it.
    """
    k = _need(params, "k", 1, 16)
    a_ids = [f"a{i}" for i in range(k)]

    def nb(v):
        if v[0] == "a":
            return (f"b{i}" for i in count())
        return list(a_ids)

    def upto(v, r):
        if v[0] == "a":
            return [f"b{i}" for i in range(r + 1)]
        return list(a_ids) if r >= 1 else []

    def level(v):
        return 1 if v[0] == "a" else int(v[1:])

    return Presentation("Kkaleph", {"k": k}, ("b0",), nb, level, locally_finite=False, upto=upto)


# -- finite graphs ------------------------------------------------------------

def ring_of_cliques(params: dict) -> FiniteGraph:
    """O_{k,l}: l copies of K^{k/2} in a ring, consecutive copies fully joined."""
    k = _need(params, "k", 2, 12)
    l = _need(params, "l", 3, 12)
    if k % 2:
        raise GraphInputError("O_{k,l} needs k even")
    h = k // 2
    vs = [f"{i}.{m}" for i in range(l) for m in range(h)]
    edges = []
    for i in range(l):
        for m in range(h):
            for n in range(m + 1, h):
                edges.append((f"{i}.{m}", f"{i}.{n}"))
            for n in range(h):
                edges.append((f"{i}.{m}", f"{(i + 1) % l}.{n}"))
    return FiniteGraph(vs, edges)


def complete(params: dict) -> FiniteGraph:
    n = _need(params, "n", 1, 40)
    vs = [str(i) for i in range(n)]
    return FiniteGraph(vs, [(vs[i], vs[j]) for i in range(n) for j in range(i + 1, n)])


def cycle(params: dict) -> FiniteGraph:
    n = _need(params, "n", 3, 500)
    vs = [str(i) for i in range(n)]
    return FiniteGraph(vs, [(vs[i], vs[(i + 1) % n]) for i in range(n)])


def multipath(params: dict) -> FiniteGraph:
    """Path on n vertices with every edge taken k times."""
    n = _need(params, "n", 2, 200)
    k = _need(params, "k", 1, 20)
    vs = [str(i) for i in range(n)]
    return FiniteGraph(vs, [(vs[i], vs[i + 1], k) for i in range(n - 1)])


# -- registry -------------------------------------------------------------------

def _claims(name: str, p: dict) -> list[Claim]:
    c = Claim
    if name == "double_ray":
        return [c("end_count", 2, "two tails", 3), c("end_vertex_degree", 1, "", 6), c("end_edge_degree", 1, "", 6)]
    if name == "ray":
        return [c("end_count", 1, "", 3), c("end_vertex_degree", 1, "", 6)]
    if name == "R2":
        return [
            c("degrees", [4], "all vertices have degree 4", 4),
            c("end_count", 2, "", 3),
            c("end_edge_degree", 3, "ends have edge-degree 3", 6),
            c("end_vertex_degree", 2, "ends have vertex-degree 2", 6),
        ]
    if name == "ladder":
        return [c("degrees", [3] if p.get("rungs", "all") == "all" else [2, 3], "", 4)]
    if name == "Dk":
        return [c("degrees", [2 * p["k"] + 1, 2 * p["k"]], "powered rays plus every second rung", 4)]
    if name == "T":
        return [c("degrees", [p["k"]], "regular", 4), c("end_vertex_degree", 1, "tree ends are thin", 5)]
    if name == "G":
        return [c("min_degree", (p["k"], None), "degree at least k", 4), c("end_count", 1, "one end", 4),
                c("no_k5_minor", 20, "planar", 0)]
    if name == "Gp":
        k = p["k"]
        return [
            c("degrees_between", (k, k + 2), "k <= d(v) <= k + 2", 5),
            c("end_vertex_degree", (k - 2, 2 * k - 3), "every end between k-2 and 2k-3", 6),
            c("no_k5_minor", 20, "planar", 0),
        ]
    if name == "Gpp":
        k = p["k"]
        return [
            c("min_degree", (k, None), "degree at least k", 4),
            c("end_vertex_degree", (None, 3), "d_v <= 3", 6),
            c("end_edge_degree", (k, None), "d_e >= k", 6),
            c("ratio_degree", (Fraction(k, 3), None), "d_e/d_v >= k/3", 6),
        ]
    if name == "Y":
        l = p["l"]
        return [c("end_count", 1, "unique end", 4), c("end_vertex_degree", 3 * l + 1, "3l + 1", 6)]
    if name == "J":
        k = p["k"]
        return [c("degrees", [k, k + 1], "k on even rows, k + 1 on odd rows", 4), c("end_count", 2, "", 3),
                c("end_vertex_degree", k, "ends have vertex-degree k", 6)]
    if name == "Tr":
        r, k = p["r"], p["k"]
        return [c("degrees", [(r + 1) * k - 1], "(r+1)k - 1", 3), c("end_vertex_degree", k, "ends have vertex-degree k", 4)]
    if name == "hatH":
        k, l = p["k"], p["l"]
        return [c("degrees", [3 * k // 2 - 1, 3 * k // 2 + 1], "3k/2 -+ 1", 3), c("end_count", 2, "", 3),
                c("end_vertex_degree", l, "ends have vertex-degree l", 5)]
    if name == "edgemin":
        r, k = p["r"], p["k"]
        return [c("min_degree", (r * k, None), "degree at least rk", 3), c("end_edge_degree", k, "ends have edge-degree k", 5)]
    if name == "strongex":
        return [c("min_degree", (p["r"] + 1, None), "", 3), c("end_vertex_degree", p["k"] + 1, "product with a path on k+1 vertices", 4)]
    if name == "H":
        return [c("girth", p["g"], "girth g", 3), c("min_degree", (3, None), "minimum degree 3", 3),
                c("end_count", 1, "", 3), c("relative_degree", (None, Fraction(6, 5)), "relative degree 1", 5),
                c("no_k5_minor", 20, "planar", 0)]
    if name == "chain_a":
        k = p["k"]
        return [c("end_vertex_degree", 1, "", 6), c("end_edge_degree", 2, "", 6),
                c("relative_degree", (Fraction(k) - Fraction(1, 2), Fraction(k)), "relative degree k", 5)]
    if name == "chain_b":
        k = p["k"]
        return [c("end_vertex_degree", k, "", 6), c("end_edge_degree", k, "", 6),
                c("relative_degree", 1, "relative degree 1", 5)]
    if name == "greedyVdel":
        k = p["k"]
        return [c("min_degree", (k, None), "", 3), c("window_k_connected", k, "k-connected windows", 2)]
    if name == "LargeEndDeg":
        k, l = p["k"], p["l"]
        return [c("degrees", [k], "all degrees k", 3), c("end_count", 2, "", 3), c("end_vertex_degree", l, "ends have vertex-degree l", 5)]
    if name == "Kkaleph":
        return [c("rayless_reduce", p["k"], "finite subgraph of minimum degree k", 10)]
    if name == "grid":
        return [c("end_count", 1, "", 3)]
    if name == "O":
        k = p["k"]
        return [c("degrees", [3 * k // 2 - 1], "3k/2 - 1", 0), c("k_connected", k, "", 0),
                c("vertex_minimal", k, "vertex-minimally k-connected", 0)]
    if name == "complete":
        return [c("degrees", [p["n"] - 1], "", 0)]
    if name == "cycle":
        return [c("degrees", [2], "", 0), c("edge_minimal", 2, "", 0)]
    if name == "multipath":
        return [c("degrees", [p["k"], 2 * p["k"]], "", 0)]
    return []


REGISTRY = {
    "double_ray": (double_ray, {}),
    "ray": (ray, {}),
    "R2": (r2, {}),
    "ladder": (ladder, {"rungs": "all"}),
    "Dk": (powered_ladder, {"k": 2}),
    "T": (regular_tree, {"k": 3}),
    "G": (g_k, {"k": 4}),
    "Gp": (g_k_pruned, {"k": 4}),
    "Gpp": (g_k_dprime, {"k": 4}),
    "Y": (y_graph, {"l": 2}),
    "J": (j_graph, {"k": 3}),
    "Tr": (blob_tree, {"r": 3, "k": 2}),
    "hatH": (hat_h, {"l": 8, "k": 4}),
    "edgemin": (clique_tree, {"r": 2, "k": 3}),
    "strongex": (tree_path_product, {"r": 3, "k": 2}),
    "H": (girth_graph, {"g": 3}),
    "chain_a": (lambda p: chain(p, "a"), {"k": 4}),
    "chain_b": (lambda p: chain(p, "b"), {"k": 4}),
    "greedyVdel": (greedy_vdel, {"k": 4}),
    "LargeEndDeg": (large_end_degree, {"k": 4, "l": 8}),
    "Kkaleph": (k_aleph, {"k": 4}),
    "grid": (grid, {"cols": None}),
    "O": (ring_of_cliques, {"k": 4, "l": 4}),
    "complete": (complete, {"n": 5}),
    "cycle": (cycle, {"n": 6}),
    "multipath": (multipath, {"n": 5, "k": 3}),
}


def names() -> list[str]:
    return sorted(REGISTRY)


def make(name: str, params: dict | None = None):
    """Build a gallery entry; returns ``(presentation_or_graph, manifest)``."""
    if name not in REGISTRY:
        raise GraphInputError(f"unknown gallery entry {name!r}; known: {', '.join(names())}")
    builder, defaults = REGISTRY[name]
    full = dict(defaults)
    full.update(params or {})
    unknown = set(full) - set(defaults)
    if unknown:
        raise GraphInputError(f"{name}: unknown parameter(s) {sorted(unknown)}")
    obj = builder(full)
    return obj, Manifest(name, full, tuple(_claims(name, full)))


def make_presentation(name: str, params: dict | None = None) -> Presentation:
    obj, _ = make(name, params)
    if isinstance(obj, FiniteGraph):
        return finite_presentation(obj, name=name)
    return obj
