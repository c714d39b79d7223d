"""Batch command-line front end.

Exit codes: 0 success, 2 input error, 3 tuple budget exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from . import analysis, automata, io
from .chain import EMPTY, STRICT_PREDECESSORS, SieveSpec
from .homology import (GF2, INTEGERS, Coefficients, magnitude_homology,
                       persistence_barcode)
from .nerve import DEFAULT_BUDGET, enumerate_complex
from .values import EPS, INF, BudgetExceededError, InputError, parse_exponent
from .vgraph import free_category, validate


def _parse_degrees(text: str) -> range:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    d = int(text)
    return range(d, d + 1)


def _parse_coeff(text: str) -> Coefficients:
    text = text.lower()
    if text == "z":
        return INTEGERS
    if text.startswith("z") and text[1:].isdigit():
        return Coefficients(int(text[1:]))
    raise InputError(f"unknown coefficient spec {text!r} (use z, z2, z5, ...)")


def _add_common(sub: argparse.ArgumentParser, default_p: str) -> None:
    sub.add_argument("input", help="distance matrix (CSV or JSON)")
    sub.add_argument("--p", default=default_p,
                     help="exponent in [1, inf] (default %(default)s)")
    sub.add_argument("--max-dim", type=int, default=None,
                     help="tuple dimension cap (default: max degree + 1)")
    sub.add_argument("--degrees", type=_parse_degrees, default=None,
                     metavar="A..B", help="homology degrees to report")
    sub.add_argument("--eps", type=float, default=EPS)
    sub.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                     help="tuple count cap (default %(default)s)")
    sub.add_argument("--workers", type=int, default=1)
    sub.add_argument("--format", choices=["json", "csv", "svg"], default="json")
    sub.add_argument("-o", "--output", default=None,
                     help="output path (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lpnerve",
        description="Filtered tuple nerves of finite generalized metric "
                    "spaces: persistence barcodes, localized (magnitude) "
                    "homology tables, and metric diagnostics.")
    subs = parser.add_subparsers(dest="command", required=True)

    nerve = subs.add_parser("nerve", help="dump the filtered complex")
    _add_common(nerve, "inf")

    ph = subs.add_parser("ph", help="persistence barcode (default p=inf, GF(2))")
    _add_common(ph, "inf")
    ph.add_argument("--coeff", default="z2")

    mh = subs.add_parser("mh", help="localized homology table (default p=1, Z)")
    _add_common(mh, "1")

    hom = subs.add_parser("homology", help="graded homology with explicit p/sieve")
    _add_common(hom, "1")
    hom.add_argument("--sieve", choices=["none", "strict"], default="none")
    hom.add_argument("--coeff", default="z")

    free = subs.add_parser("free", help="(min, +_p) path closure of a space")
    _add_common(free, "1")

    an = subs.add_parser("analyze",
                         help="ultrametric flag, critical exponents, "
                              "degree-1 generator pairs")
    _add_common(an, "1")
    an.add_argument("--tol", type=float, default=1e-6)

    auto = subs.add_parser("automaton",
                           help="cost space and cost-primitive pairs")
    _add_common(auto, "1")
    return parser


def _emit(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_validated(args):
    X = io.load_vgraph(args.input)
    report = validate(X, args.eps)
    if not report.ok:
        raise InputError("; ".join(report.violations))
    return X


def _degrees(args, default_hi: int = 1) -> range:
    return args.degrees if args.degrees is not None else range(0, default_hi + 1)


def _max_dim(args, degrees: range) -> int:
    need = max(degrees) + 1
    if args.max_dim is None:
        return need
    if args.max_dim < need:
        raise InputError(
            f"--max-dim {args.max_dim} is too small for degree "
            f"{max(degrees)} (need at least {need})")
    return args.max_dim


def run(args) -> int:
    p = parse_exponent(args.p)
    if args.command == "nerve":
        X = _load_validated(args)
        # no homology here, so max_dim is just the tuple cap
        dim = args.max_dim if args.max_dim is not None else max(_degrees(args)) + 1
        fc = enumerate_complex(X, p, dim,
                               budget=args.budget, workers=args.workers)
        _emit(args, io.dumps(io.complex_to_json(fc)))
        return 0

    if args.command == "ph":
        X = _load_validated(args)
        degrees = _degrees(args)
        coeff = _parse_coeff(args.coeff)
        fc = enumerate_complex(X, p, _max_dim(args, degrees),
                               budget=args.budget, workers=args.workers)
        bc = persistence_barcode(fc, max(degrees), coeff, eps=args.eps)
        bc.bars = [b for b in bc.bars if b.degree in degrees]
        if args.format == "svg":
            _emit(args, io.barcode_to_svg(bc))
        elif args.format == "csv":
            _emit(args, io.barcode_to_csv(bc))
        else:
            _emit(args, io.dumps(io.barcode_to_json(bc)))
        return 0

    if args.command == "mh":
        X = _load_validated(args)
        degrees = _degrees(args)
        rows = magnitude_homology(X, p, degrees, _max_dim(args, degrees),
                                  budget=args.budget, workers=args.workers)
        if args.format == "csv":
            _emit(args, io.homology_to_csv(rows))
        else:
            _emit(args, io.dumps(io.homology_to_json(rows)))
        return 0

    if args.command == "homology":
        from .chain import generators_at
        from .homology import homology_at
        X = _load_validated(args)
        degrees = _degrees(args)
        coeff = _parse_coeff(args.coeff)
        sieve = SieveSpec(STRICT_PREDECESSORS if args.sieve == "strict" else EMPTY)
        fc = enumerate_complex(X, p, _max_dim(args, degrees),
                               budget=args.budget, workers=args.workers)
        rows = [
            homology_at(fc, n, r, sieve, coeff, eps=args.eps)
            for r in fc.grades for n in degrees
        ]
        if args.format == "csv":
            _emit(args, io.homology_to_csv(rows))
        else:
            _emit(args, io.dumps(io.homology_to_json(rows)))
        return 0

    if args.command == "free":
        X = _load_validated(args)
        closed = free_category(X, p)
        if args.format == "csv":
            _emit(args, io.vgraph_to_csv(closed))
        else:
            _emit(args, io.dumps({
                "vertices": closed.vertices,
                "edges": [
                    {"from": a, "to": b, "dist": closed.d(a, b)}
                    for a in closed.vertices for b in closed.vertices if a != b
                ],
            }))
        return 0

    if args.command == "analyze":
        import math
        X = _load_validated(args)
        pairs = []
        for a in X.vertices:
            for b in X.vertices:
                if a == b:
                    continue
                d = X.d(a, b)
                if d <= args.eps or math.isinf(d):
                    continue
                pairs.append({
                    "a": a, "b": b, "dist": d,
                    "p_critical": analysis.p_critical(X, a, b, tol=args.tol,
                                                      eps=args.eps),
                })
        grades = sorted({round(row["dist"], 9) for row in pairs})
        generators = [
            {"grade": r, "p": p,
             "pairs": [list(g) for g in analysis.h1_generators(X, p, r,
                                                               eps=args.eps)]}
            for r in grades
        ] if X.is_strict(args.eps) and not math.isinf(p) else []
        _emit(args, io.dumps({
            "ultrametric": analysis.is_ultrametric(X, args.eps),
            "p_critical": pairs,
            "h1_generators": generators,
        }))
        return 0

    if args.command == "automaton":
        A = io.load_automaton(args.input)
        C = automata.cost_space(A)
        strict_C, proj = automata.strictify(C, args.eps)
        primitives = automata.cost_primitive_pairs(strict_C, args.eps)
        degrees = _degrees(args, default_hi=1)
        table = magnitude_homology(strict_C, 1.0, [1],
                                   max(2, _max_dim(args, range(1, 2))),
                                   budget=args.budget, workers=args.workers)
        _emit(args, io.dumps({
            "cost_space": {
                "vertices": C.vertices,
                "matrix": [[C.dist[i, j] for j in range(len(C))]
                           for i in range(len(C))],
            },
            "collapsed": {v: proj.map[v] for v in C.vertices},
            "cost_primitive_pairs": [
                {"from": a, "to": b, "grade": r} for a, b, r in primitives
            ],
            "degree1_homology": io.homology_to_json(table),
        }))
        return 0

    raise InputError(f"unknown command {args.command!r}")


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return run(args)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
