"""Command-line front end: construct, classify, bound, certify, scan, emit.

All numeric output is exact ("p/q" strings); decimal values appear only in
auxiliary "approx" fields.  Exit codes: 0 success / certified / clean scan,
1 unrecognized / insufficient / collision, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import __version__
from .exact import DEFAULT_WIDTH, Matrix, Polynomial, RootBracket
from .generators import (
    FAMILY_CORNER,
    FAMILY_DOUBLE_CORNER,
    FAMILY_G2,
    FAMILY_LOWER,
    G2_LOWER_B,
    doubling_bvector,
    g2_pair,
    lower_pair,
    shift_pair,
)
from .closure import classify, subalgebra_closure
from .groups import exp_corner, exp_lower, exp_upper, freeness_scan, thin_pair
from .pingpong import (
    CONCLUSION_FREE_DENSE,
    Certificate,
    PingPongBound,
    certify_free_dense,
    compute_r0,
    compute_t0,
    s0,
)

_FAMILY_ALIASES = {
    "corner": FAMILY_CORNER,
    "double_corner": FAMILY_DOUBLE_CORNER,
    "lower": FAMILY_LOWER,
    "g2": FAMILY_G2,
}


def matrix_to_doc(m: Matrix) -> dict:
    return {
        "rows": m.n,
        "cols": m.n,
        "entries": [[str(x) for x in row] for row in m.rows],
    }


def matrix_from_doc(doc: dict) -> Matrix:
    rows, cols = doc["rows"], doc["cols"]
    if rows != cols:
        raise ValueError("matrix document must be square")
    entries = doc["entries"]
    if len(entries) != rows or any(len(r) != cols for r in entries):
        raise ValueError("matrix document dimensions inconsistent")
    return Matrix([[Fraction(x) for x in row] for row in entries])


def _poly_doc(p: Polynomial) -> dict:
    return {
        "coefficients": [str(c) for c in p.coefficients],
        "integer_coefficients": list(p.integer_coefficients()),
    }


def _bracket_doc(br: Optional[RootBracket]) -> Optional[dict]:
    if br is None:
        return None
    return {
        "lo": str(br.lo),
        "hi": str(br.hi),
        "approx": float((br.lo + br.hi) / 2),
    }


def _bound_doc(bound: PingPongBound) -> dict:
    return {
        "kind": bound.kind,
        "polynomials": [_poly_doc(p) for p in bound.polys],
        "bracket": _bracket_doc(bound.bracket),
        "safe_value": str(bound.safe_value),
        "safe_value_approx": float(bound.safe_value),
    }


def _emit(doc: dict) -> None:
    json.dump(doc, sys.stdout, indent=2)
    sys.stdout.write("\n")


def _parse_b(spec: str, n: int) -> tuple[Fraction, ...]:
    if spec == "doubling":
        return doubling_bvector(n)
    return tuple(Fraction(x.strip()) for x in spec.split(","))


def _build_pair(family: str, n: Optional[int], b_spec: Optional[str]):
    if family == FAMILY_G2:
        return g2_pair()
    if n is None:
        raise ValueError("--n is required for this family")
    if family == FAMILY_LOWER:
        return lower_pair(_parse_b(b_spec or "doubling", n))
    return shift_pair(n, family)


def _default_width() -> Fraction:
    spec = os.environ.get("LIEGEN_DEFAULT_WIDTH")
    return Fraction(spec) if spec else DEFAULT_WIDTH


def cmd_gen(args: argparse.Namespace) -> int:
    pair = _build_pair(args.family, args.n, args.b)
    doc = {
        "family": pair.family,
        "n": pair.n,
        "first": matrix_to_doc(pair.first),
        "second": matrix_to_doc(pair.second),
    }
    if pair.b is not None:
        doc["b"] = [str(x) for x in pair.b]
    _emit(doc)
    return 0


def cmd_gen_or_closure_report(seed: Sequence[Matrix], n: int) -> tuple[dict, int]:
    result = subalgebra_closure(list(seed))
    label = classify(n, result)
    doc = {
        "dim": result.dim,
        "rounds": result.rounds,
        "type": {"family": label.family, "rank": label.rank, "name": label.name},
    }
    return doc, (0 if label.family != "unrecognized" else 1)


def cmd_closure(args: argparse.Namespace) -> int:
    mats = []
    for path in args.files:
        with open(path) as fh:
            mats.append(matrix_from_doc(json.load(fh)))
    if not mats:
        raise ValueError("at least one matrix file is required")
    doc, code = cmd_gen_or_closure_report(mats, mats[0].n)
    _emit(doc)
    return code


def cmd_classify(args: argparse.Namespace) -> int:
    pair = _build_pair(args.family, args.n, args.b)
    doc, code = cmd_gen_or_closure_report([pair.first, pair.second], pair.n)
    doc["family"] = pair.family
    doc["n"] = pair.n
    _emit(doc)
    return code


def cmd_bounds(args: argparse.Namespace) -> int:
    width = Fraction(args.width) if args.width else _default_width()
    doc: dict = {"width": str(width)}
    if args.family == FAMILY_G2:
        doc["family"] = FAMILY_G2
        doc["n"] = 7
        doc["t"] = _bound_doc(compute_t0(7, width))
        doc["r"] = _bound_doc(compute_r0(7, G2_LOWER_B, width))
    elif args.family == FAMILY_LOWER:
        if args.n is None:
            raise ValueError("--n is required")
        b = _parse_b(args.b or "doubling", args.n)
        if len(b) != args.n - 1:
            raise ValueError("b-vector length must be n - 1")
        doc["family"] = FAMILY_LOWER
        doc["n"] = args.n
        doc["b"] = [str(x) for x in b]
        doc["t"] = _bound_doc(compute_t0(args.n, width))
        doc["r"] = _bound_doc(compute_r0(args.n, b, width))
    elif args.family == FAMILY_CORNER:
        if args.n is None:
            raise ValueError("--n is required")
        doc["family"] = FAMILY_CORNER
        doc["n"] = args.n
        doc["t"] = _bound_doc(compute_t0(args.n, width))
        doc["s0"] = str(s0())
    else:
        raise ValueError(f"no bounds are defined for family {args.family!r}")
    _emit(doc)
    return 0


def cmd_exp(args: argparse.Namespace) -> int:
    if args.kind == "upper":
        if args.t is None:
            raise ValueError("--t is required for kind upper")
        g = exp_upper(Fraction(args.t), args.n)
    elif args.kind == "corner":
        if args.s is None:
            raise ValueError("--s is required for kind corner")
        g = exp_corner(Fraction(args.s), args.n)
    else:
        if args.r is None:
            raise ValueError("--r is required for kind lower")
        b = _parse_b(args.b or "doubling", args.n)
        if len(b) != args.n - 1:
            raise ValueError("b-vector length must be n - 1")
        g = exp_lower(Fraction(args.r), b)
    _emit({"kind": args.kind, "n": args.n, "matrix": matrix_to_doc(g.matrix)})
    return 0


def certificate_to_doc(cert: Certificate, width: Fraction) -> dict:
    doc = {
        "tool_version": __version__,
        "input": {
            "family": cert.family,
            "n": cert.n,
            "parameters": {
                k: [str(x) for x in v] if isinstance(v, tuple) else str(v)
                for k, v in cert.parameters.items()
            },
            "width": str(width),
        },
        "generators": {
            "first": matrix_to_doc(cert.pair.first),
            "second": matrix_to_doc(cert.pair.second),
        },
        "closure": {
            "dim": cert.closure.dim,
            "rounds": cert.closure.rounds,
            "type": cert.type_label.name,
            "target_dim": cert.target.dim,
            "target_type": cert.target.name,
        },
        "bounds": {"t": _bound_doc(cert.t_bound)},
        "conclusion": cert.conclusion,
    }
    if cert.second_bound is not None:
        doc["bounds"][cert.second_bound_kind] = _bound_doc(cert.second_bound)
    else:
        doc["bounds"]["s0"] = str(s0())
    return doc


def cmd_certify(args: argparse.Namespace) -> int:
    width = Fraction(args.width) if args.width else _default_width()
    if args.family == FAMILY_CORNER and args.s is None:
        raise ValueError("corner family needs --s")
    if args.family in (FAMILY_LOWER, FAMILY_G2) and args.r is None:
        raise ValueError(f"{args.family} needs --r")
    b = None
    n = args.n
    if args.family == FAMILY_LOWER:
        if n is None:
            raise ValueError("--n is required")
        b = _parse_b(args.b or "doubling", n)
    if args.family == FAMILY_G2:
        n = 7
    if n is None:
        raise ValueError("--n is required")
    cert = certify_free_dense(
        n,
        args.family,
        t=Fraction(args.t),
        s=Fraction(args.s) if args.s else None,
        r=Fraction(args.r) if args.r else None,
        b=b,
        width=width,
    )
    _emit(certificate_to_doc(cert, width))
    return 0 if cert.conclusion == CONCLUSION_FREE_DENSE else 1


def cmd_scan(args: argparse.Namespace) -> int:
    report = freeness_scan(
        args.n,
        t=Fraction(args.t),
        s=Fraction(args.s) if args.s is not None else None,
        r=Fraction(args.r) if args.r is not None else None,
        b=_parse_b(args.b, args.n) if args.b else None,
        max_syllables=args.max_syll,
        max_exponent=args.max_exp,
    )
    doc = {
        "n": report.n,
        "parameters": {
            k: [str(x) for x in v] if isinstance(v, tuple) else str(v)
            for k, v in report.parameters.items()
        },
        "max_syllables": report.max_syllables,
        "max_exponent": report.max_exponent,
        "words_checked": report.words_checked,
        "collisions": [list(w.syllables) for w in report.collisions],
        "seed": args.seed,
    }
    _emit(doc)
    return 0 if report.clean else 1


def cmd_thin(args: argparse.Namespace) -> int:
    pair = thin_pair(args.n, args.q, args.s)
    doc = {
        "n": pair.n,
        "q": args.q,
        "t": pair.t,
        "s": pair.s,
        "first": matrix_to_doc(pair.first),
        "second": matrix_to_doc(pair.second),
        "certified": pair.certified,
        "warning": pair.warning,
    }
    _emit(doc)
    return 0 if pair.certified else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="liegen",
        description="Exact generator pairs, density and freeness certificates",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def family_arg(p: argparse.ArgumentParser, choices=None) -> None:
        p.add_argument(
            "--family",
            required=True,
            type=lambda v: _FAMILY_ALIASES.get(v, v),
            choices=choices or list(_FAMILY_ALIASES.values()),
        )

    p = sub.add_parser("gen", help="print a generator pair")
    family_arg(p)
    p.add_argument("--n", type=int)
    p.add_argument("--b", help='"doubling" or comma list like 8,12,14')
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("closure", help="closure and type of matrices from files")
    p.add_argument("files", nargs="+")
    p.set_defaults(func=cmd_closure)

    p = sub.add_parser("classify", help="closure and type of a named family")
    family_arg(p)
    p.add_argument("--n", type=int)
    p.add_argument("--b")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("bounds", help="certified ping-pong bounds")
    family_arg(p, choices=[FAMILY_CORNER, FAMILY_LOWER, FAMILY_G2])
    p.add_argument("--n", type=int)
    p.add_argument("--b")
    p.add_argument("--width")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("exp", help="exact exponential of a generator")
    p.add_argument("--kind", required=True, choices=["upper", "corner", "lower"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t")
    p.add_argument("--s")
    p.add_argument("--r")
    p.add_argument("--b")
    p.set_defaults(func=cmd_exp)

    p = sub.add_parser("certify", help="free-dense certificate")
    family_arg(p, choices=[FAMILY_CORNER, FAMILY_LOWER, FAMILY_G2])
    p.add_argument("--n", type=int)
    p.add_argument("--t", required=True)
    p.add_argument("--s")
    p.add_argument("--r")
    p.add_argument("--b")
    p.add_argument("--width")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("scan", help="exhaustive word identity scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--t", required=True)
    p.add_argument("--s")
    p.add_argument("--r")
    p.add_argument("--b")
    p.add_argument("--max-syll", type=int, default=4)
    p.add_argument("--max-exp", type=int, default=2)
    p.add_argument("--seed", type=int, default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("thin", help="integer thin-subgroup generator pair")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.set_defaults(func=cmd_thin)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"liegen: error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())
