"""Command-line front end.

Subcommands: example, transform, verify, positivity, sample, search,
darboux1d. Every run is deterministic given its flags; exit status is 0
for success/true, 1 for verified-false/refuted, 2 for usage or input
errors, 3 for an inconclusive branch-and-bound.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Optional

from . import construct, darboux, numeric, search, serialization
from .errors import Inconclusive, MoutardKitError, VerificationFailed
from .polynomials import BivariatePoly, RationalFn
from .positivity import DEFAULT_MAX_DEPTH, PositivityCertificate, global_positivity
from .moutard import verify_solution

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INCONCLUSIVE = 3


class UsageError(Exception):
    pass


def _load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: parse error at byte {exc.pos}: {exc.msg}") from exc


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
            if not text.endswith("\n"):
                fh.write("\n")
    else:
        print(text)


def _parse_fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"bad rational constant {text!r}") from exc


def _decimal17(value: Fraction) -> str:
    with localcontext() as ctx:
        ctx.prec = 17
        return str(Decimal(value.numerator) / Decimal(value.denominator))


def _load_seeds(path: str) -> construct.SeedPair:
    obj = _load_json(path)
    try:
        omega1 = serialization.obj_to_poly(obj["omega1"])
        omega2 = serialization.obj_to_poly(obj["omega2"])
        u0 = (
            serialization.obj_to_rationalfn(obj["u0"])
            if "u0" in obj
            else RationalFn.zero()
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: bad seeds file: {exc}") from exc
    return construct.SeedPair(u0, omega1, omega2)


def _load_rationalfn(path: str) -> RationalFn:
    obj = _load_json(path)
    try:
        if "num" in obj and "den" in obj and "terms" not in obj:
            return serialization.obj_to_rationalfn(obj)
        return RationalFn.from_poly(serialization.obj_to_poly(obj))
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{path}: bad function file: {exc}") from exc


def _bundle_obj(result: construct.DoubleMoutardResult, verified: bool) -> dict:
    return {
        "W": serialization.poly_to_obj(result.w_poly),
        "C": serialization.fraction_to_obj(result.constant),
        "u": serialization.rationalfn_to_obj(result.u),
        "psi1": serialization.rationalfn_to_obj(result.psi1),
        "psi2": serialization.rationalfn_to_obj(result.psi2),
        "verified": verified,
    }


def cmd_example(args) -> int:
    report = search.verify_example_full(args.ident, args.max_depth)
    obj = {
        "example": args.ident,
        "bundle": _bundle_obj(report.result, True),
        "u_decay": report.u_report.to_obj(),
        "psi1_decay": report.psi1_report.to_obj(),
        "psi2_decay": report.psi2_report.to_obj(),
        "l2": {"psi1": report.l2_psi1, "psi2": report.l2_psi2},
        "positivity": report.certificate.to_obj(),
        "record": report.record.to_obj(),
    }
    _emit(serialization.dumps(obj), args.out)
    return EXIT_OK


def cmd_transform(args) -> int:
    seeds = _load_seeds(args.seeds)
    constant = _parse_fraction(args.constant)
    result = construct.double_transform(seeds, constant)
    verified = construct.verify_lemma(seeds, constant)
    _emit(serialization.dumps(_bundle_obj(result, verified)), args.out)
    return EXIT_OK if verified else EXIT_FALSE


def cmd_verify(args) -> int:
    u = _load_rationalfn(args.potential)
    psi = _load_rationalfn(args.solution)
    ok = verify_solution(u, psi)
    _emit(serialization.dumps({"verified": ok}), args.out)
    return EXIT_OK if ok else EXIT_FALSE


def cmd_positivity(args) -> int:
    obj = _load_json(args.poly)
    try:
        w = serialization.obj_to_poly(obj)
    except (KeyError, TypeError, ValueError) as exc:
        raise UsageError(f"{args.poly}: bad polynomial file: {exc}") from exc
    outcome = global_positivity(w, args.max_depth)
    if isinstance(outcome, PositivityCertificate):
        _emit(serialization.dumps({"certified": True, "certificate": outcome.to_obj()}), args.out)
        return EXIT_OK
    _emit(serialization.dumps({"certified": False, "refutation": outcome.to_obj()}), args.out)
    return EXIT_FALSE


def cmd_sample(args) -> int:
    fn = _load_rationalfn(args.fn)
    if args.resolution < 2:
        raise UsageError("resolution must be at least 2")
    lo, hi = _parse_fraction(args.min), _parse_fraction(args.max)
    if lo >= hi:
        raise UsageError("empty sampling range")
    grid = numeric.uniform_grid(lo, hi, lo, hi, args.resolution)
    lines = ["x,y,value"]
    poles = 0
    for px, py in grid:
        den = fn.den.evaluate(px, py)
        if den == 0:
            poles += 1
            value = "nan"
        else:
            value = _decimal17(fn.num.evaluate(px, py) / den)
        lines.append(f"{_decimal17(px)},{_decimal17(py)},{value}")
    if poles:
        print(f"warning: {poles} grid points hit a pole", file=sys.stderr)
    _emit("\n".join(lines), args.out)
    return EXIT_OK


def cmd_search(args) -> int:
    records = search.sweep(
        args.degree, args.seed, args.trials, max_depth=args.max_depth
    )
    text = "\n".join(serialization.dumps(r.to_obj()) for r in records)
    _emit(text, args.out)
    return EXIT_OK


def cmd_darboux1d(args) -> int:
    chain = darboux.rational_chain(args.steps)
    obj = {"chain": [serialization.rationalfn1d_to_obj(u) for u in chain]}
    _emit(serialization.dumps(obj), args.out)
    return EXIT_OK


def build_parser(default_depth: int) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="moutardkit",
        description="Exact construction and verification of planar Schrodinger "
        "operators with rational potentials and zero-energy kernels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p):
        p.add_argument("--out", help="write the report to a file instead of stdout")
        p.add_argument(
            "--max-depth",
            type=int,
            default=default_depth,
            help=f"branch-and-bound depth limit (default {default_depth})",
        )

    p = sub.add_parser("example", help="reproduce and verify a built-in example")
    p.add_argument("ident", type=int, choices=(1, 2), metavar="{1,2}")
    add_common(p)
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("transform", help="run the double construction on a seeds file")
    p.add_argument("--seeds", required=True, help="JSON file with omega1/omega2 (and optional u0)")
    p.add_argument("--constant", required=True, help="free constant C, e.g. 20 or -3/2")
    add_common(p)
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("verify", help="check (-Lap + u) psi = 0 symbolically")
    p.add_argument("--potential", required=True)
    p.add_argument("--solution", required=True)
    add_common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("positivity", help="certify or refute global positivity")
    p.add_argument("--poly", required=True)
    add_common(p)
    p.set_defaults(func=cmd_positivity)

    p = sub.add_parser("sample", help="sample a function on a square grid as CSV")
    p.add_argument("--fn", required=True)
    p.add_argument("--min", default="-5")
    p.add_argument("--max", default="5")
    p.add_argument("--resolution", type=int, default=101, help="points per side")
    add_common(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("search", help="random seed-pair sweep at a fixed degree")
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    add_common(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("darboux1d", help="the one-dimensional chain of potentials")
    p.add_argument("--steps", type=int, default=5)
    add_common(p)
    p.set_defaults(func=cmd_darboux1d)

    return parser


def main(argv: Optional[list] = None) -> int:
    env_depth = os.environ.get("MOUTARD_MAX_DEPTH")
    try:
        default_depth = int(env_depth) if env_depth else DEFAULT_MAX_DEPTH
    except ValueError:
        print(f"bad MOUTARD_MAX_DEPTH {env_depth!r}", file=sys.stderr)
        return EXIT_USAGE
    parser = build_parser(default_depth)
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Inconclusive as exc:
        print(f"inconclusive: {exc}", file=sys.stderr)
        return EXIT_INCONCLUSIVE
    except VerificationFailed as exc:
        print(f"verification failed: {exc}", file=sys.stderr)
        return EXIT_FALSE
    except MoutardKitError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
