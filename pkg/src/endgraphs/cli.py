"""Command-line entry point.

Exit status: 0 computed, 1 property violated or verification failed,
2 inconclusive at budget, 3 input error. Output is canonical JSON unless a
DOT or table format is asked for.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import serialize
from .enddeg import UNBOUNDED, edge_degree, ratio_degree, relative_degree, vertex_degree
from .gallery import make, make_presentation, names
from .graph import FiniteGraph, GraphInputError, from_dot, from_json, from_json_obj, to_dot, to_json_obj
from .gridminor import GridMinorCert, grid_minor_extract, verify_grid_cert
from .manifest import FAIL, INCONCLUSIVE, verify_manifest
from .minimality import (
    MODES,
    SCHEDULES,
    WITNESS_MODES,
    check_minimality,
    cycles_degree_k,
    degree_census,
    greedy_deletion_trace,
    reverify,
    small_degree_witness,
    sweep,
)
from .presentation import EndHandle, PresentationError, ball, default_handle
from .reduction import ReductionCert, force_minor_pipeline, rayless_reduce, relative_reduce, thresholds

OK, VIOLATED, INCONCLUSIVE_EXIT, INPUT_ERROR = 0, 1, 2, 3


class InputError(Exception):
    pass


def _params(text: str | None) -> dict:
    if not text:
        return {}
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"--params: JSON error at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc
    if not isinstance(obj, dict):
        raise InputError("--params must be a JSON object")
    return obj


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _presentation(args):
    if args.name not in names():
        raise InputError(f"unknown presentation {args.name!r}; known: {', '.join(names())}")
    return make_presentation(args.name, _params(args.params))


def _handle(p, spec: str | None):
    return EndHandle.from_spec(spec) if spec else default_handle(p)


def _read_graph(path: str) -> FiniteGraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    if path.endswith(".dot") or text.lstrip().startswith(("graph", "strict")):
        return from_dot(text)
    return from_json(text)


def _read_json(path: str):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: JSON error at line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _emit(args, obj, text: str | None = None) -> None:
    out = text if text is not None else serialize.dumps(obj)
    if getattr(args, "out", None):
        Path(args.out).write_text(out)
    else:
        sys.stdout.write(out)


def _table(rows: list[list]) -> str:
    widths = [max(len(str(r[i])) for r in rows) for i in range(len(rows[0]))]
    return "".join("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() + "\n" for r in rows)


# -- subcommands -----------------------------------------------------------------

def cmd_gallery(args) -> int:
    if args.action == "list":
        rows = []
        for n in names():
            obj, man = make(n)
            kind = "finite" if isinstance(obj, FiniteGraph) else "presentation"
            rows.append({"name": n, "kind": kind, "defaults": man.params, "claims": [c.prop for c in man.claims]})
        _emit(args, rows)
        return OK
    if not args.name:
        raise InputError("gallery make/verify needs a name")
    if args.name not in names():
        raise InputError(f"unknown presentation {args.name!r}; known: {', '.join(names())}")
    if args.action == "make":
        obj, man = make(args.name, _params(args.params))
        if isinstance(obj, FiniteGraph):
            g, frontier = obj, ()
        else:
            b = ball(obj, args.radius)
            g, frontier = b.graph, b.frontier
        if args.format == "dot":
            _emit(args, None, to_dot(g, args.name, frontier))
        else:
            _emit(args, to_json_obj(g, frontier=serialize.plain(frozenset(frontier)), name=args.name,
                                    params=man.params))
        return OK
    rep = verify_manifest(args.name, _params(args.params), args.budget)
    _emit(args, rep)
    return {FAIL: VIOLATED, INCONCLUSIVE: INCONCLUSIVE_EXIT}.get(rep.status, OK)


def cmd_ball(args) -> int:
    p = _presentation(args)
    b = ball(p, args.radius)
    if args.format == "dot":
        _emit(args, None, to_dot(b.graph, args.name, b.frontier))
    elif args.format == "table":
        rows = [["level", "vertices", "frontier"]]
        for lvl in range(args.radius + 1):
            vs = [v for v in b.graph.vertices if b.levels[v] == lvl]
            rows.append([lvl, len(vs), sum(1 for v in vs if v in b.frontier)])
        _emit(args, None, _table(rows))
    else:
        _emit(args, to_json_obj(b.graph, radius=args.radius, frontier=serialize.plain(b.frontier),
                                levels={str(v): b.levels[v] for v in b.graph.vertices}))
    return OK


def cmd_enddeg(args) -> int:
    p = _presentation(args)
    h = _handle(p, args.end)
    fn = {"vertex": vertex_degree, "edge": edge_degree, "ratio": ratio_degree, "relative": relative_degree}[args.kind]
    est = fn(p, h, args.budget)
    _emit(args, {"schema": "estimate/1", "presentation": args.name, "params": p.params, "end": h.to_spec(),
                 "estimate": est})
    return OK if est.upper != UNBOUNDED and est.lower == est.upper else INCONCLUSIVE_EXIT


def cmd_reduce(args) -> int:
    p = _presentation(args)
    if args.mode == "pipeline":
        res = force_minor_pipeline(p, args.r, args.budget)
        out = {"schema": "transcript/1", "presentation": args.name, "params": p.params, "pipeline": res,
               "verified": res.verify(p) if res.certified else False}
        _emit(args, out)
        if res.certified:
            return OK if out["verified"] else VIOLATED
        return INCONCLUSIVE_EXIT
    if args.mode == "rayless":
        res = rayless_reduce(p, args.m, args.budget)
    else:
        res = relative_reduce(p, Fraction(args.k), args.budget)
    out = {"schema": "transcript/1", "presentation": args.name, "params": p.params, "result": res}
    if isinstance(res, ReductionCert):
        out["verified"] = res.verify(p)
        _emit(args, out)
        return OK if out["verified"] else VIOLATED
    _emit(args, out)
    return INCONCLUSIVE_EXIT


def cmd_gridminor(args) -> int:
    p = _presentation(args)
    h = _handle(p, args.end)
    try:
        r0, r1 = (int(x) for x in args.annulus.split(","))
    except ValueError:
        raise InputError("--annulus expects r0,r1") from None
    ex = grid_minor_extract(p, h, args.k, r0, r1, args.pconn, args.m_min)
    out = {"presentation": args.name, "params": p.params, "end": h.to_spec(), "result": ex}
    _emit(args, out["result"].cert if ex.ok else out)
    if args.ball_out:
        from .gridminor import annulus

        g, _, _ = annulus(p, h, r0, r1)
        Path(args.ball_out).write_text(serialize.dumps(to_json_obj(g)))
    return OK if ex.ok else INCONCLUSIVE_EXIT


def _graph_input(args) -> FiniteGraph:
    if args.graph:
        return _read_graph(args.graph)
    if not args.name:
        raise InputError("give a gallery name or --graph FILE")
    if args.name not in names():
        raise InputError(f"unknown presentation {args.name!r}; known: {', '.join(names())}")
    obj, _ = make(args.name, _params(args.params))
    if isinstance(obj, FiniteGraph):
        return obj
    return ball(obj, args.radius).graph


def cmd_minimal(args) -> int:
    if args.action == "sweep":
        s = sweep(args.n, args.k)
        _emit(args, s)
        return OK if s.ok else VIOLATED
    if args.action == "witness":
        if args.graph:
            target = _read_graph(args.graph)
        else:
            target = _presentation(args) if args.name not in ("", None) else None
            if target is None:
                raise InputError("give a gallery name or --graph FILE")
            obj, _ = make(args.name, _params(args.params))
            target = obj if isinstance(obj, FiniteGraph) else target
        w = small_degree_witness(target, args.k, args.mode, args.budget)
        _emit(args, w)
        return OK if w.kind != "not found at budget" else INCONCLUSIVE_EXIT
    if args.action == "greedy":
        p = _presentation(args)
        tr = greedy_deletion_trace(p, args.k, args.schedule, args.budget, args.inner, args.steps)
        _emit(args, tr)
        return OK
    g = _graph_input(args)
    if args.action == "check":
        rep = check_minimality(g, args.k, args.mode)
        _emit(args, rep)
        return OK if rep.verdict else VIOLATED
    if args.action == "census":
        _emit(args, degree_census(g, args.k))
        return OK
    cv = cycles_degree_k(g, args.k, args.max_len)
    _emit(args, cv)
    return OK if cv.ok else VIOLATED


def cmd_thresholds(args) -> int:
    _emit(args, thresholds(args.k, args.c1, args.c2))
    return OK


def cmd_verify_cert(args) -> int:
    cert = _read_json(args.cert)
    schema = cert.get("schema") if isinstance(cert, dict) else None
    if schema == "grid-cert/1":
        if not args.ball:
            raise InputError("grid certificates are checked against a ball: verify-cert CERT BALL")
        g = from_json_obj(_read_json(args.ball))
        ok = verify_grid_cert(GridMinorCert.from_json(cert), g)
    elif schema == "transcript/1":
        p = make_presentation(cert["presentation"], cert.get("params"))
        res = cert.get("result") or (cert.get("pipeline") or {}).get("reduction")
        if not res or "vertices" not in res or not isinstance(res["vertices"], list):
            raise InputError("transcript carries no finite subgraph to verify")
        rc = ReductionCert(res["kind"], frozenset(res["vertices"]), int(res["min_degree"]),
                           Fraction(res["average_degree"]), Fraction(res["threshold"]))
        ok = rc.verify(p)
    elif schema == "minimality-report/1":
        if not args.ball:
            raise InputError("minimality reports are checked against their graph: verify-cert REPORT GRAPH")
        g = _read_graph(args.ball)
        rep = check_minimality(g, int(cert["k"]), cert["mode"])
        ok = serialize.dumps(rep) == serialize.dumps(cert) and reverify(g, rep)
    else:
        raise InputError(f"unknown certificate schema {schema!r}")
    sys.stdout.write(serialize.dumps({"schema": schema, "valid": ok}))
    return OK if ok else VIOLATED


# -- parser -------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="endgraphs", description="End degrees, reductions, grid minors and minimality.")
    sub = ap.add_subparsers(dest="command", required=True)

    def pres(sp, name_required=True):
        if name_required:
            sp.add_argument("name", help="gallery entry")
        sp.add_argument("--params", help="JSON object of family parameters")
        sp.add_argument("--out", help="write output here instead of stdout")

    sp = sub.add_parser("gallery", help="list, build or verify gallery entries")
    sp.add_argument("action", choices=["list", "make", "verify"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--params")
    sp.add_argument("--radius", type=_nonneg, default=3)
    sp.add_argument("--budget", type=_positive)
    sp.add_argument("--format", choices=["json", "dot"], default="json")
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_gallery)

    sp = sub.add_parser("ball", help="ball of a presentation")
    pres(sp)
    sp.add_argument("--radius", type=_nonneg, default=3)
    sp.add_argument("--format", choices=["json", "dot", "table"], default="json")
    sp.set_defaults(func=cmd_ball)

    sp = sub.add_parser("enddeg", help="end-degree estimates")
    pres(sp)
    sp.add_argument("--kind", choices=["vertex", "edge", "ratio", "relative"], default="vertex")
    sp.add_argument("--budget", type=_positive, default=6)
    sp.add_argument("--end", help="end handle, e.g. '1@v;2@w'")
    sp.set_defaults(func=cmd_enddeg)

    sp = sub.add_parser("reduce", help="rayless/relative reduction or the minor pipeline")
    pres(sp)
    sp.add_argument("--mode", choices=["rayless", "relative", "pipeline"], default="relative")
    sp.add_argument("--m", type=_positive, default=2)
    sp.add_argument("--k", default="2", help="rational threshold, e.g. 3 or 5/2")
    sp.add_argument("--r", type=_positive, default=4)
    sp.add_argument("--budget", type=_positive, default=30)
    sp.set_defaults(func=cmd_reduce)

    sp = sub.add_parser("gridminor", help="grid-minor extraction near an end")
    pres(sp)
    sp.add_argument("--end")
    sp.add_argument("--k", type=_positive, required=True)
    sp.add_argument("--annulus", default="1,8")
    sp.add_argument("--pconn", type=_positive, default=1)
    sp.add_argument("--m-min", type=_positive, default=1)
    sp.add_argument("--ball-out", help="also write the annulus graph (for verify-cert)")
    sp.set_defaults(func=cmd_gridminor)

    sp = sub.add_parser("minimal", help="minimality checks, censuses, witnesses and sweeps")
    sp.add_argument("action", choices=["check", "census", "cycles", "witness", "greedy", "sweep"])
    sp.add_argument("name", nargs="?")
    sp.add_argument("--graph", help="graph file (JSON or DOT)")
    sp.add_argument("--params")
    sp.add_argument("--radius", type=_nonneg, default=3)
    sp.add_argument("--k", type=_positive, default=2)
    sp.add_argument("--n", type=_positive, default=8)
    sp.add_argument("--mode", default=None)
    sp.add_argument("--budget", type=_positive, default=6)
    sp.add_argument("--max-len", type=_positive)
    sp.add_argument("--schedule", choices=sorted(SCHEDULES))
    sp.add_argument("--inner", type=_nonneg, default=2)
    sp.add_argument("--steps", type=_positive)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_minimal)

    sp = sub.add_parser("thresholds", help="explicit thresholds for a given k")
    sp.add_argument("--k", type=_positive, required=True)
    sp.add_argument("--c1", type=float, default=1.0)
    sp.add_argument("--c2", type=float, default=1.0)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_thresholds)

    sp = sub.add_parser("verify-cert", help="re-verify a certificate file")
    sp.add_argument("cert")
    sp.add_argument("ball", nargs="?", help="ball/graph JSON the certificate refers to")
    sp.set_defaults(func=cmd_verify_cert)
    return ap


def _check_modes(args) -> None:
    if args.command != "minimal":
        return
    if args.action == "check":
        args.mode = args.mode or "edge-min-kconn"
        if args.mode not in MODES:
            raise InputError(f"--mode must be one of {', '.join(MODES)}")
    if args.action == "witness":
        args.mode = args.mode or "vertex-min-kconn"
        if args.mode not in WITNESS_MODES:
            raise InputError(f"--mode must be one of {', '.join(WITNESS_MODES)}")
    if args.action == "greedy" and not args.schedule:
        raise InputError("greedy needs --schedule")


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:  # argparse usage errors
        return INPUT_ERROR if exc.code else OK
    try:
        _check_modes(args)
        return args.func(args)
    except (InputError, GraphInputError, PresentationError, KeyError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return INPUT_ERROR


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
