"""Command-line front end.

Every command prints one JSON document on stdout, serialised with sorted keys
and a fixed indent so that identical inputs give identical bytes.  All
documents carry ``"schema": 1`` and ``"command"``.

analyze
    ``{"verdict", "certificates", "trace", "report"}``; the report embeds the config.  ``verdict`` is
    one of TypicalCertified, NotAJacobianPair, Inconclusive; each certificate is
    ``{"kind", "payload"}`` with rationals written as strings.  Exit code 0, 2
    or 3 respectively.
newton
    ``{"polygon", "dimension", "outer_edges"}``; each outer edge has
    ``points``, ``normal`` and ``interior_points``.  With ``--xi`` also
    ``face`` and ``restriction``.
restrict
    Face or point-set restriction and, for an edge, its univariate reduction.
roots
    Sturm count, isolating intervals, rational roots and square-free factors.
enumerate
    Polygon list, or an audit report with ``--audit``.  Exit 2 on audit failure.
gen-tame
    Seeded tame pairs with their constant Jacobian.

Input errors exit with 1 and a message on stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .certify import CertifyConfig, SamplingConfig
from .edgecheck import is_degenerate_on_edge, reduce_restriction
from .enumeration import (CASE_PAPER_IDS, CASES, PolygonConstraints, audit_case,
                          enumerate_polygons, load_paper_polygons)
from .newton import (edge_interior_lattice_points, face, newton_polygon,
                     outer_edges, primitive, symbolic_restriction)
from .pipeline import analyze_pair, generate_tame_pair
from .polyarith import (PolySyntaxError, RationalInterval, UniPoly, format_poly,
                        format_unipoly, isolate_real_roots, jacobian_det, parse_poly,
                        rational_roots, squarefree_decomposition, sturm_count_real_roots,
                        to_unipoly)

SCHEMA = 1
EXIT_CODES = {"TypicalCertified": 0, "NotAJacobianPair": 2, "Inconclusive": 3}
EXIT_INPUT = 1
EXIT_AUDIT = 2


class InputError(Exception):
    pass


def _emit(doc: dict, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps({"schema": SCHEMA, **doc}, sort_keys=True, indent=2,
                         ensure_ascii=False))
    out.write("\n")


def _parse(text: str, name: str):
    try:
        return parse_poly(text)
    except PolySyntaxError as exc:
        raise InputError(f"{name}: syntax error: {exc.message} at offset {exc.offset}\n"
                         f"  {text}\n  {' ' * exc.offset}^") from None


def _int_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(s) for s in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected two integers a,b, got {text!r}") from None
    return a, b


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _fraction_list(text: str) -> tuple[Fraction, ...]:
    return tuple(_fraction(s) for s in text.split(",") if s.strip())


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _points(text: str) -> list[tuple[int, int]]:
    return [_int_pair(s) for s in text.split(";") if s.strip()]


# --- commands ----------------------------------------------------------------


def cmd_analyze(args) -> int:
    f = _parse(args.f, "f")
    g = _parse(args.g, "g")
    if args.grid_size < 2 or args.grid_bound < 1:
        raise InputError("grid size must be >= 2 and grid bound >= 1")
    config = CertifyConfig(
        sampling=SamplingConfig(args.grid_size, args.grid_bound, args.random_points,
                                args.max_denominator, args.seed),
        mu_list=args.mu, xi_bound=args.xi_bound, refine_depth=args.depth)
    result = analyze_pair(f, g, config)
    doc = {"command": "analyze", **result.as_json()}
    if args.figures:
        doc["figures"] = _analyze_figures(f, g, args.figures)
    _emit(doc)
    return EXIT_CODES[result.verdict.tag]


def _analyze_figures(f, g, directory: str) -> list[str]:
    from .plotting import plot_polygon
    os.makedirs(directory, exist_ok=True)
    out = []
    for name, p in (("f", f), ("g", g)):
        if p.is_zero():
            continue
        path = os.path.join(directory, f"newton_{name}.svg")
        plot_polygon(newton_polygon(p), path, title=f"Newton polygon of {name}")
        out.append(path)
    return out


def newton_document(p, xi: Optional[Sequence[int]] = None) -> dict:
    if p.is_zero():
        raise InputError("the zero polynomial has no Newton polygon")
    poly = newton_polygon(p)
    rows = []
    if poly.dimension > 0:
        for e in outer_edges(poly):
            rows.append({"points": [list(q) for q in e.points], "normal": list(e.direction),
                         "interior_points": [list(q) for q in edge_interior_lattice_points(e)]})
    doc = {"polygon": poly.to_json(), "dimension": poly.dimension, "outer_edges": rows}
    if xi is not None:
        if xi == (0, 0):
            raise InputError("xi must be nonzero")
        fc = face(poly, xi)
        r = symbolic_restriction(p, fc)
        doc["face"] = fc.to_json()
        doc["restriction"] = format_poly(r)
        if fc.is_edge:
            red = reduce_restriction(r, primitive(xi))
            doc["reduction"] = {"nu": list(red.nu), "F": format_unipoly(red.uni, "s"),
                                "prefactor": list(red.monomial_prefactor)}
    return doc


def cmd_newton(args) -> int:
    p = _parse(args.poly, "poly")
    doc = {"command": "newton", "poly": format_poly(p), **newton_document(p, args.xi)}
    if args.svg:
        from .plotting import plot_polygon
        poly = newton_polygon(p)
        top = None
        if args.xi is not None and "face" in doc and len(doc["face"]["points"]) == 2:
            top = doc["face"]["points"]
        plot_polygon(poly, args.svg, top_face=top, marks=sorted(p.support()))
    _emit(doc)
    return 0


def cmd_restrict(args) -> int:
    p = _parse(args.poly, "poly")
    if p.is_zero():
        raise InputError("the zero polynomial has no faces")
    doc: dict = {"command": "restrict", "poly": format_poly(p)}
    if args.xi is not None:
        if args.xi == (0, 0):
            raise InputError("xi must be nonzero")
        fc = face(newton_polygon(p), args.xi)
        doc["face"] = fc.to_json()
        r = symbolic_restriction(p, fc)
        doc["restriction"] = format_poly(r)
        if fc.is_edge:
            d = is_degenerate_on_edge(p, fc)
            doc["F"] = format_unipoly(d.reduction.uni, "s")
            doc["nu"] = list(d.reduction.nu)
            doc["degenerate"] = d.degenerate
            doc["witness"] = format_unipoly(d.witness, "s") if d.witness else None
    else:
        doc["points"] = [list(q) for q in args.points]
        doc["restriction"] = format_poly(symbolic_restriction(p, args.points))
    _emit(doc)
    return 0


def cmd_roots(args) -> int:
    p = _parse(args.poly, "poly")
    if any(j for _, j in p.support()):
        raise InputError("roots expects a polynomial in x alone")
    u: UniPoly = to_unipoly(p, "x")
    if u.is_zero():
        raise InputError("the zero polynomial has infinitely many roots")
    interval = None
    if args.interval:
        lo, hi = args.interval
        if lo > hi:
            raise InputError("interval lower end exceeds upper end")
        interval = RationalInterval(lo, hi)
    doc = {
        "command": "roots",
        "poly": format_unipoly(u, "x"),
        "count": sturm_count_real_roots(u, interval),
        "isolating_intervals": [iv.as_json() for iv in isolate_real_roots(u)],
        "rational_roots": [str(r) for r in rational_roots(u)],
        "squarefree_factors": [{"factor": format_unipoly(fac, "x"), "multiplicity": m}
                               for fac, m in squarefree_decomposition(u)],
    }
    if interval is not None:
        doc["interval"] = interval.as_json()
    _emit(doc)
    return 0


def _load_constraints(path: str) -> PolygonConstraints:
    try:
        with open(path) as fh:
            obj = json.load(fh)
        return PolygonConstraints.from_json(obj)
    except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
        raise InputError(f"constraints file {path}: {exc}") from None


def cmd_enumerate(args) -> int:
    if args.case is not None:
        if args.case not in CASES:
            raise InputError(f"unknown case {args.case!r}; choose from {', '.join(CASES)}")
        c, case_id = CASES[args.case], args.case
    else:
        c, case_id = _load_constraints(args.constraints), "custom"
    if args.jobs < 1:
        raise InputError("jobs must be >= 1")
    doc: dict = {"command": "enumerate", "case": case_id, "constraints": c.to_json()}
    code = 0
    if args.audit:
        try:
            table = load_paper_polygons(args.audit)
        except (OSError, json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
            raise InputError(f"polygon file {args.audit}: {exc}") from None
        ids = CASE_PAPER_IDS.get(case_id, sorted(table))
        listed = {k: table[k] for k in ids if k in table}
        rep = audit_case(case_id, listed, c, jobs=args.jobs)
        doc["audit"] = rep.as_json()
        polys = rep.enumerated
        code = 0 if rep.passed else EXIT_AUDIT
    else:
        polys = enumerate_polygons(c, jobs=args.jobs)
        doc["polygons"] = [p.to_json()["vertices"] for p in polys]
    doc["count"] = len(polys)
    if args.figures:
        from .plotting import plot_polygons
        os.makedirs(args.figures, exist_ok=True)
        path = os.path.join(args.figures, f"enumerate_{case_id}.svg")
        items = [(str(k + 1), p) for k, p in enumerate(polys)]
        if plot_polygons(items, path, top_face=c.top_face):
            doc["figures"] = [path]
    _emit(doc)
    return code


def cmd_gen_tame(args) -> int:
    pairs = []
    for k in range(args.count):
        seed = args.seed + k
        f, g = generate_tame_pair(seed, args.steps, args.bound, args.max_degree)
        pairs.append({"seed": seed, "f": format_poly(f), "g": format_poly(g),
                      "jacobian": format_poly(jacobian_det(f, g))})
    _emit({"command": "gen-tame", "steps": args.steps, "bound": args.bound,
           "max_degree": args.max_degree, "pairs": pairs})
    return 0


# --- parser ------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    d = CertifyConfig()
    s = d.sampling
    ap = argparse.ArgumentParser(prog="jacpair", description=__doc__.split("\n")[0])
    ap.add_argument("--version", action="version", version=f"jacpair {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)
    fmt = argparse.ArgumentDefaultsHelpFormatter

    a = sub.add_parser("analyze", help="certify or refute a candidate pair", formatter_class=fmt)
    a.add_argument("-f", required=True, help="first component")
    a.add_argument("-g", required=True, help="second component")
    a.add_argument("--grid-size", type=int, default=s.grid_size,
                   help="sampling grid points per axis")
    a.add_argument("--grid-bound", type=int, default=s.grid_bound,
                   help="sampling grid covers [-B, B]^2")
    a.add_argument("--random-points", type=int, default=s.random_points,
                   help="seeded random rational sample points")
    a.add_argument("--max-denominator", type=_positive, default=s.max_denominator,
                   help="denominator bound for random points")
    a.add_argument("--seed", type=int, default=s.seed, help="sampling seed")
    a.add_argument("--mu", type=_fraction_list, default=",".join(map(str, d.mu_list)),
                   help="comma-separated pencil coefficients")
    a.add_argument("--xi-bound", type=_positive, default=d.xi_bound,
                   help="max |xi_i| for vertex-parity directions")
    a.add_argument("--depth", type=_positive, default=d.refine_depth,
                   help="box subdivision depth for critical-point exclusion")
    a.add_argument("--figures", metavar="DIR", help="write Newton polygon SVGs here")
    a.set_defaults(func=cmd_analyze)

    n = sub.add_parser("newton", help="Newton polygon and outer edges", formatter_class=fmt)
    n.add_argument("poly")
    n.add_argument("--xi", type=_int_pair, help="direction a,b for a face and restriction")
    n.add_argument("--svg", metavar="PATH", help="write a polygon plot")
    n.set_defaults(func=cmd_newton)

    r = sub.add_parser("restrict", help="symbolic restriction to a face or point set",
                       formatter_class=fmt)
    r.add_argument("poly")
    g = r.add_mutually_exclusive_group(required=True)
    g.add_argument("--xi", type=_int_pair, help="direction a,b")
    g.add_argument("--points", type=_points, help="exponents as 'i,j;i,j;...'")
    r.set_defaults(func=cmd_restrict)

    ro = sub.add_parser("roots", help="Sturm count and root isolation in x",
                        formatter_class=fmt)
    ro.add_argument("poly")
    ro.add_argument("--interval", type=lambda t: tuple(_fraction(v) for v in t.split(",")),
                    help="closed interval lo,hi for the count")
    ro.set_defaults(func=cmd_roots)

    e = sub.add_parser("enumerate", help="lattice polygon enumeration and audits",
                       formatter_class=fmt)
    src = e.add_mutually_exclusive_group(required=True)
    src.add_argument("--case", help=f"built-in case: {', '.join(CASES)}")
    src.add_argument("--constraints", metavar="FILE", help="constraints JSON file")
    e.add_argument("--audit", metavar="POLYGONS", help="polygons.json to audit against")
    e.add_argument("--jobs", type=int, default=1, help="worker processes")
    e.add_argument("--figures", metavar="DIR", help="write a grid of the polygons here")
    e.set_defaults(func=cmd_enumerate)

    t = sub.add_parser("gen-tame", help="seeded tame pairs", formatter_class=fmt)
    t.add_argument("--seed", type=int, default=0)
    t.add_argument("--count", type=_positive, default=1)
    t.add_argument("--steps", type=int, choices=range(0, 5), default=4)
    t.add_argument("--bound", type=_positive, default=3, help="coefficient bound")
    t.add_argument("--max-degree", type=_positive, default=2,
                   help="degree of the triangular steps")
    t.set_defaults(func=cmd_gen_tame)
    return ap


_VALUE_FLAGS = ("--xi", "--interval", "--points", "--mu")


def _join_negative_values(argv: list[str]) -> list[str]:
    # argparse reads "-1,1" as an option; pass it as "--xi=-1,1"
    out: list[str] = []
    it = iter(argv)
    for tok in it:
        if tok in _VALUE_FLAGS:
            nxt = next(it, None)
            if nxt is None:
                out.append(tok)
            else:
                out.append(f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = ap.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
