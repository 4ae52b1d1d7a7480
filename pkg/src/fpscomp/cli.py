"""Command-line front end.

Thin client over the service handlers: arguments are parsed into the
same request models the HTTP endpoints use, and results are printed as
JSON (or a readable rendering with --output pretty).  Exit codes:
0 success, 2 negative mathematical result, 1 operational error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import NegativeResult, SeriesError
from .field import ApproxField, ExactField
from .series import TruncatedSeries, parse_series
from . import service


def _build_field(args):
    if args.field == "exact":
        return ExactField(conductor=args.conductor)
    return ApproxField(tol=args.tol)


def _load_series(text, field, trunc):
    """A series argument: inline JSON, @file / path to JSON, or compact text."""
    if text.startswith("@"):
        text = Path(text[1:]).read_text()
    elif text.endswith(".json") and Path(text).is_file():
        text = Path(text).read_text()
    stripped = text.strip()
    if stripped.startswith("{"):
        return TruncatedSeries.from_json(json.loads(stripped))
    return parse_series(field, stripped, trunc)


def _series_model(series):
    return service.SeriesModel.model_validate(series.to_json())


def _looks_like_series(obj):
    return (
        isinstance(obj, dict)
        and set(obj) == {"trunc", "field", "coeffs"}
    )


def _prettify(obj):
    if _looks_like_series(obj):
        return str(TruncatedSeries.from_json(obj))
    if isinstance(obj, dict):
        return {k: _prettify(v) for k, v in obj.items()}
    if isinstance(obj, list):
        return [_prettify(v) for v in obj]
    return obj


def _emit(result, args):
    if args.output == "pretty":
        print(json.dumps(_prettify(result), indent=2))
    else:
        print(json.dumps(result))
    return 0 if result.get("status") == "ok" else 2


def build_parser():
    p = argparse.ArgumentParser(
        prog="fpscomp",
        description="composition of formal power series of order >= 2",
    )
    p.add_argument("--trunc", type=int, default=32, metavar="N")
    p.add_argument("--conductor", type=int, default=24, metavar="L")
    p.add_argument("--tol", type=float, default=1e-9)
    p.add_argument("--field", choices=["exact", "approx"], default="exact")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", choices=["json", "pretty"], default="json")
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("boettcher", help="Boettcher function of a series")
    sp.add_argument("series")
    sp.add_argument("--branch", type=int, default=0)
    sp.add_argument("--all-branches", action="store_true")

    sp = sub.add_parser("transition", help="transition group of a series")
    sp.add_argument("series")

    sp = sub.add_parser("decompose", help="decomposition classes")
    sp.add_argument("series")
    sp.add_argument("--count-only", action="store_true")

    sp = sub.add_parser("solve", help="functional-equation solvers")
    ssub = sp.add_subparsers(dest="equation", required=True)
    for name, fields in (
        ("right", ["f", "a"]),
        ("left", ["f", "a"]),
        ("joint", ["a", "b"]),
        ("factor", ["a", "c", "d"]),
        ("common", ["a", "b"]),
    ):
        q = ssub.add_parser(name)
        for fld in fields:
            q.add_argument(fld)
        if name == "common":
            q.add_argument("--order", type=int, required=True)

    sp = sub.add_parser("symmetry", help="symmetry profile / decomposition")
    sp.add_argument("series")
    sp.add_argument("--decompose", nargs=2, metavar=("A1", "A2"))
    sp.add_argument("--modulus", type=int)

    sp = sub.add_parser("monomialize", help="conjugate generators to monomials")
    sp.add_argument("series", nargs="+")

    sp = sub.add_parser("commute", help="compositional commutation test")
    sp.add_argument("a")
    sp.add_argument("b")

    sp = sub.add_parser("probe", help="right-reversibility probe")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--bounds", type=int, nargs=2, default=[2, 2])

    sp = sub.add_parser("selftest", help="deterministic property checks")
    sp.add_argument("--rounds", type=int, default=5)

    return p


def _dispatch(args):
    field = _build_field(args)
    if not 4 <= args.trunc <= 256:
        raise SeriesError("truncation must lie in [4, 256]")

    def S(text):
        return _series_model(_load_series(text, field, args.trunc))

    cmd = args.command
    if cmd == "boettcher":
        return service.handle_boettcher(
            service.BoettcherRequest(
                series=S(args.series),
                branch=args.branch,
                all_branches=args.all_branches,
            )
        )
    if cmd == "transition":
        return service.handle_transition(
            service.TransitionRequest(series=S(args.series))
        )
    if cmd == "decompose":
        return service.handle_decompose(
            service.DecomposeRequest(
                series=S(args.series), count_only=args.count_only
            )
        )
    if cmd == "solve":
        eq = args.equation
        if eq in ("right", "left"):
            req = service.SolvePairRequest(f=S(args.f), a=S(args.a))
            handler = (
                service.handle_solve_right
                if eq == "right"
                else service.handle_solve_left
            )
            return handler(req)
        if eq == "joint":
            return service.handle_solve_joint(
                service.SolveJointRequest(a=S(args.a), b=S(args.b))
            )
        if eq == "factor":
            return service.handle_solve_factor(
                service.SolveFactorRequest(
                    a=S(args.a), c=S(args.c), d=S(args.d)
                )
            )
        return service.handle_common_factor(
            service.CommonFactorRequest(
                a=S(args.a), b=S(args.b), order=args.order
            )
        )
    if cmd == "symmetry":
        a1 = a2 = None
        if args.decompose:
            a1, a2 = (S(t) for t in args.decompose)
        return service.handle_symmetry(
            service.SymmetryRequest(
                series=S(args.series), a1=a1, a2=a2, modulus=args.modulus
            )
        )
    if cmd == "monomialize":
        return service.handle_monomialize(
            service.MonomializeRequest(
                generators=[S(t) for t in args.series]
            )
        )
    if cmd == "commute":
        return service.handle_commute(
            service.CommuteRequest(a=S(args.a), b=S(args.b))
        )
    if cmd == "probe":
        return service.handle_probe(
            service.ProbeRequest(
                a=S(args.a),
                b=S(args.b),
                l_max=args.bounds[0],
                s_max=args.bounds[1],
            )
        )
    if cmd == "selftest":
        return service.handle_selftest(
            service.SelftestRequest(
                seed=args.seed,
                trunc=min(args.trunc, 16),
                rounds=args.rounds,
                field=service.FieldModel(
                    kind=args.field, conductor=args.conductor, tol=args.tol
                ),
            )
        )
    raise SeriesError(f"unknown command {cmd!r}")


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse uses exit code 2 for usage errors; that code is
        # reserved here for negative mathematical results
        return 1 if exc.code else 0
    try:
        result = _dispatch(args)
    except NegativeResult as exc:
        result = {
            "status": "no",
            "reason": str(exc),
            "error_type": type(exc).__name__,
        }
        return _emit(result, args)
    except SeriesError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return _emit(result, args)


if __name__ == "__main__":
    sys.exit(main())
