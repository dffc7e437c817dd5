"""``indroots`` command line.

JSON goes to stdout; a one-line human summary goes to stderr.
Exit codes: 0 done (or verdict none), 2 input error, 3 imaginary roots found.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import constructions as C
from .arith import GaussRat
from .certify import certify_imaginary, residue_profile, profile_balanced
from .errors import IndRootsError
from .expr import Leaf, to_text
from .graph6 import parse_graph6
from .indpoly import ind_poly_expr
from .parser import parse_expr
from .scan import DEFAULT_CHUNK_SIZE, scan_file

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_FLAGGED = 3


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, sort_keys=True)
    sys.stdout.write("\n")


def _note(msg: str) -> None:
    print(msg, file=sys.stderr)


def _graph_arg(args):
    if args.g6 is not None:
        return Leaf(parse_graph6(args.g6))
    return parse_expr(args.expr)


def cmd_poly(args) -> int:
    e = _graph_arg(args)
    p = ind_poly_expr(e)
    _emit({"expr": to_text(e), "order": str(e.order), "alpha": p.degree, "poly": p.to_json()})
    _note(f"I(x) = {p}")
    return EXIT_OK


def cmd_certify(args) -> int:
    e = _graph_arg(args)
    p = ind_poly_expr(e)
    cert = certify_imaginary(p)
    out = cert.to_json()
    out["residue_profile"] = [str(c) for c in residue_profile(p).as_tuple()]
    out["order"] = str(e.order)
    out["alpha"] = p.degree
    _emit(out)
    roots = ", ".join(f"+-{b}i" for b in cert.rational_imaginary_roots) or "none rational"
    _note(f"verdict: {cert.verdict} ({roots}); balanced mod 4: {profile_balanced(residue_profile(p))}")
    return EXIT_FLAGGED if cert.exists else EXIT_OK


def _require(args, name: str, family: str):
    value = getattr(args, name)
    if value is None:
        raise IndRootsError(f"--family {family} needs --{name.replace('_', '-')}")
    return value


def cmd_construct(args) -> int:
    fam = args.family
    i = GaussRat(0, 1)
    if fam == "gabcd":
        n = args.n or 1
        a, b, c, d = C.gabcd_params(n)
        e = C.build_gabcd(a, b, c, d)
        cert = C.certify_construction("gabcd", {"n": n, "a": a, "b": b, "c": c, "d": d}, e, i)
    elif fam == "seed":
        alpha = _require(args, "alpha", fam)
        rec = C.seed(alpha)
        e = C.seed_plus_8k(rec.seed, rec.d, 0)
        cert = C.certify_construction("seed", {"alpha": alpha, "d": rec.d}, e, i)
    elif fam == "alpha":
        alpha = _require(args, "alpha", fam)
        e = C.graph_with_alpha(alpha)
        root = i
        params = {"alpha": alpha}
        if args.k:
            e = C.scale_root(e, args.k)
            root = GaussRat(0, Fraction(1, abs(args.k)))
            params["k"] = args.k
        cert = C.certify_construction("alpha", params, e, root)
    elif fam == "corona":
        g = parse_graph6(_require(args, "g6", fam))
        e, m = C.corona_construction(g)
        cert = C.certify_construction("corona", {"n": g.n}, e, i, {"m": str(m)})
    elif fam == "embed":
        return cmd_embed(args)
    else:  # argparse restricts choices
        raise IndRootsError(f"unknown family {fam}")
    _emit(cert.to_json())
    _note(f"{fam}: order {cert.order}, alpha {cert.alpha}, I({cert.root}) = {cert.evaluation_value}")
    return EXIT_OK


def cmd_embed(args) -> int:
    g = parse_graph6(_require(args, "g6", "embed"))
    k = args.k or 1
    _, cert = C.embed_with_imaginary_roots(g, k)
    out = cert.to_json()
    if args.no_expr:
        out.pop("expr", None)
    _emit(out)
    _note(f"embed: order {cert.order}, m {cert.extra['m']}, I({cert.root}) = {cert.evaluation_value}")
    return EXIT_OK


def cmd_dioph(args) -> int:
    pair = C.dioph(args.N)
    _emit({"n": pair.n, "x": str(pair.x), "y": str(pair.y)})
    _note(f"({pair.x}, {pair.y})")
    return EXIT_OK


def cmd_scan(args) -> int:
    report = scan_file(
        args.file,
        jobs=args.jobs,
        lenient=args.lenient,
        max_order=args.max_order,
        chunk_size=args.chunk_size,
    )
    sys.stdout.write(report.to_json(include_timing=not args.no_timing) + "\n")
    _note(
        f"scanned {report.input_count} graphs (max order {report.max_order_seen}), "
        f"flagged {len(report.flagged)}, malformed {len(report.malformed)}, "
        f"{report.elapsed:.1f}s"
    )
    return EXIT_FLAGGED if report.flagged else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="indroots", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    def graph_source(p):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--g6", help="graph6 string")
        src.add_argument("--expr", help="graph expression, e.g. 'join(Kbar[6],K[8])'")

    p = sub.add_parser("poly", help="independence polynomial")
    graph_source(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("certify", help="certify presence/absence of purely imaginary roots")
    graph_source(p)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("construct", help="generate a family member with imaginary roots")
    p.add_argument("--family", required=True, choices=["gabcd", "seed", "alpha", "corona", "embed"])
    p.add_argument("--n", type=int, help="index for gabcd (default 1)")
    p.add_argument("--alpha", type=int, help="independence number for seed/alpha")
    p.add_argument("--k", type=int, help="root scaling i/k for alpha/embed")
    p.add_argument("--g6", help="input graph for corona/embed")
    p.add_argument("--no-expr", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("embed", help="embed a graph in one with roots +-i/k")
    p.add_argument("--g6", required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--no-expr", action="store_true", help="omit the expression text")
    p.set_defaults(func=cmd_embed)

    p = sub.add_parser("dioph", help="solution x_N, y_N of x^2 - 3y^2 = -2")
    p.add_argument("N", type=int)
    p.set_defaults(func=cmd_dioph)

    p = sub.add_parser("scan", help="scan a graph6 corpus ('-' for stdin, .gz accepted)")
    p.add_argument("file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--lenient", action="store_true", help="skip malformed lines instead of aborting")
    p.add_argument("--max-order", type=int, default=60)
    p.add_argument("--chunk-size", type=int, default=DEFAULT_CHUNK_SIZE)
    p.add_argument("--no-timing", action="store_true", help="leave timing out of the JSON")
    p.set_defaults(func=cmd_scan)
    return ap


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        return args.func(args)
    except (IndRootsError, ValueError, OSError) as exc:
        _note(f"error: {exc}")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
