"""Command-line front end: compute, analyze, verify-db, newton, replay."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import db, knots, newton, structure, surgery
from .poly import BivarPoly, PolyParseError, format_poly, parse_poly

__all__ = ["main"]


def _tolerance(args):
    if getattr(args, "tolerance", None) is not None:
        return args.tolerance
    env = os.environ.get("APOLY_TOLERANCE")
    if env:
        try:
            val = float(env)
        except ValueError:
            raise SystemExit(f"invalid APOLY_TOLERANCE: {env!r}")
        if val <= 0:
            raise SystemExit("APOLY_TOLERANCE must be positive")
        return val
    return surgery.DEFAULT_TOLERANCE


def _emit_json(obj):
    print(json.dumps(obj, indent=2))


def _parse_or_exit(text):
    try:
        p = parse_poly(text)
    except PolyParseError as exc:
        print(f"error: {exc}")
        raise SystemExit(1)
    if p.is_zero:
        print("error: the zero polynomial has no analysis")
        raise SystemExit(1)
    return p


def cmd_compute(args) -> int:
    try:
        if args.unknot:
            name, poly = "unknot", knots.unknot_a()
        elif args.torus:
            p, q = args.torus
            name, poly = f"torus({p},{q})", knots.torus_a(p, q)
        else:
            p, q = args.two_bridge
            name, poly = f"twobridge({p},{q})", knots.eliminate_two_bridge(p, q)
    except (ValueError, knots.EliminationDegeneracyError) as exc:
        print(f"error: {exc}")
        return 1
    claims = not args.unknot
    report = structure.analyze(poly, name=name, claims_nontrivial_knot=claims)
    if args.json:
        _emit_json({"name": name, "polynomial": format_poly(poly), "report": report.as_dict()})
    else:
        print(format_poly(poly))
        for k, v in report.as_dict().items():
            if k != "name":
                print(f"  {k}: {v}")
    return 0


def cmd_analyze(args) -> int:
    text = args.poly
    if args.file:
        try:
            with open(args.file, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            print(f"error: {exc}")
            return 1
    poly = _parse_or_exit(text)
    report = structure.analyze(
        poly, name=args.name, claims_nontrivial_knot=args.nontrivial
    )
    if args.json:
        _emit_json(report.as_dict())
    else:
        for k, v in report.as_dict().items():
            print(f"{k}: {v}")
    return 0


def cmd_verify_db(args) -> int:
    try:
        loaded = db.load_table(args.path)
    except OSError as exc:
        print(f"error: {exc}")
        return 1
    for err in loaded.errors:
        print(f"record error (line {err.line}, {err.name or '?'}): {err.message}")
    report = db.verify_all(loaded.records, jobs=args.jobs)
    if args.json:
        _emit_json(report.as_dict())
    else:
        print(report.to_text())
    return report.exit_code


def cmd_newton(args) -> int:
    poly = _parse_or_exit(args.poly)
    ngon = newton.newton_polygon(poly.normal_form())
    degenerate = ngon.degenerate
    if len(ngon.vertices) < 2:
        slopes = []
        vertical = None
    else:
        slopes = newton.edge_slopes(ngon)
        vertical = newton.has_vertical_edge(ngon)
    if args.svg:
        try:
            with open(args.svg, "w", encoding="utf-8") as fh:
                fh.write(newton.render_svg(ngon, title=args.title))
        except OSError as exc:
            print(f"error: {exc}")
            return 1
    payload = {
        "vertices": [list(v) for v in ngon.vertices],
        "degenerate": degenerate,
        "edge_slopes": [str(s) for s in slopes],
        "vertical_edge": vertical,
    }
    if args.json:
        _emit_json(payload)
    else:
        print(f"vertices: {payload['vertices']}")
        if degenerate:
            print("degenerate polygon")
        print(f"edge slopes: {', '.join(payload['edge_slopes']) or '(none)'}")
        print(f"vertical edge: {vertical}")
        if args.svg:
            print(f"wrote {args.svg}")
    return 0


def cmd_replay(args) -> int:
    poly = _parse_or_exit(args.poly)
    if poly.deg_m() != 0:
        print(
            "error: the replay targets the excluded case deg_M = 0; "
            f"this polynomial has deg_M = {poly.deg_m()}"
        )
        return 1
    report = surgery.replay_contradiction(poly, n_max=args.nmax, tolerance=_tolerance(args))
    if args.json:
        _emit_json(report.as_dict())
    else:
        print(report.to_text())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="apoly",
        description="Exact A-polynomial computation and structural analysis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="compute the A-polynomial of a knot")
    group = c.add_mutually_exclusive_group(required=True)
    group.add_argument("--unknot", action="store_true")
    group.add_argument("--torus", nargs=2, type=int, metavar=("P", "Q"))
    group.add_argument("--two-bridge", nargs=2, type=int, metavar=("P", "Q"))
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_compute)

    a = sub.add_parser("analyze", help="structural analysis of a polynomial")
    a.add_argument("poly", nargs="?", default="")
    a.add_argument("--file", help="read the polynomial expression from a file")
    a.add_argument("--name", default="")
    a.add_argument("--nontrivial", action="store_true", help="assert the knot is nontrivial")
    a.add_argument("--json", action="store_true")
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify-db", help="batch-verify a record file")
    v.add_argument("path")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify_db)

    n = sub.add_parser("newton", help="Newton polygon, slopes, SVG rendering")
    n.add_argument("poly")
    n.add_argument("--svg", help="write the polygon as SVG to this path")
    n.add_argument("--title", default="")
    n.add_argument("--json", action="store_true")
    n.set_defaults(func=cmd_newton)

    r = sub.add_parser("replay", help="replay the deg_M = 0 contradiction")
    r.add_argument("poly")
    r.add_argument("--nmax", type=int, default=5)
    r.add_argument("--json", action="store_true")
    r.set_defaults(func=cmd_replay)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    code = args.func(args)
    if argv is None:
        sys.exit(code)
    return code


if __name__ == "__main__":
    main()
