"""Command-line interface.

Verbs: polar, pole, traversale, involution, classify, run, render, verify.
Exact literals only: points as "(x, y, z)", lines as "[u, v, w]", conics as
six rationals "a b c d e f", involution couples as "{t1, t2}" with "inf".

Exit codes: 0 all checks pass, 1 a check failed, 2 bad input (parse errors,
unknown references, geometric preconditions).  DESARGUES_SEED, when set,
overrides --seed.
"""

from __future__ import annotations

import argparse
import os
import sys

from .conic import Conic, classify, polar, pole
from .errors import GeometryError, SceneError
from .involution import PointPair, classify_and_fixed_points, involution_from_two_pairs, souche_of
from .numbers import format_extended, parse_rational
from .projective import PLine, PPoint, canonical_chart
from .render import FIGURES, render_figure
from .scene import run_scene
from .synthetic import traversale_construction_transcript, traversale_from_quadrangle
from .verify import ALL_SUITES, verify_all, verify_suite


class _InputError(Exception):
    pass


def _parse_conic(text: str) -> Conic:
    parts = text.replace(",", " ").split()
    if len(parts) != 6:
        raise _InputError(f"a conic needs six rationals (a b c d e f), got {text!r}")
    try:
        coeffs = [parse_rational(p) for p in parts]
    except ValueError as exc:
        raise _InputError(str(exc)) from None
    return Conic.from_coefficients(*coeffs)


def _parse_point(text: str) -> PPoint:
    try:
        return PPoint.parse(text)
    except ValueError as exc:
        raise _InputError(str(exc)) from None


def _parse_line(text: str) -> PLine:
    try:
        return PLine.parse(text)
    except ValueError as exc:
        raise _InputError(str(exc)) from None


def _parse_pair(text: str) -> PointPair:
    try:
        return PointPair.parse(text)
    except ValueError as exc:
        raise _InputError(str(exc)) from None


def _parse_viewport(text: str):
    parts = text.split(",")
    if len(parts) != 4:
        raise _InputError("viewport must be xmin,ymin,xmax,ymax")
    try:
        return tuple(parse_rational(p) for p in parts)
    except ValueError as exc:
        raise _InputError(str(exc)) from None


def _effective_seed(args) -> int:
    env = os.environ.get("DESARGUES_SEED")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise _InputError(f"DESARGUES_SEED must be an integer, got {env!r}") from None
    return args.seed


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=1, help="PRNG seed (DESARGUES_SEED overrides)")
    common.add_argument("--cases", type=int, default=None, help="cases per randomized property")
    common.add_argument("--out", default=None, help="output file path")

    parser = argparse.ArgumentParser(
        prog="traversale",
        description="Exact projective polarity: Desargues constructions vs quadratic forms.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("polar", parents=[common], help="polar line of a point")
    p.add_argument("--conic", required=True)
    p.add_argument("--point", required=True)

    p = sub.add_parser("pole", parents=[common], help="pole point of a line")
    p.add_argument("--conic", required=True)
    p.add_argument("--line", required=True)

    p = sub.add_parser(
        "traversale", parents=[common],
        help="ruler-built traversale of a point, checked against the polar",
    )
    p.add_argument("--conic", required=True)
    p.add_argument("--point", required=True)
    p.add_argument(
        "--transcript", default=None, metavar="PATH",
        help="also write the construction as a runnable scene transcript",
    )

    p = sub.add_parser("involution", parents=[common], help="involution from two couples")
    p.add_argument("--pair", action="append", required=True, help='couple "{t1, t2}", twice')

    p = sub.add_parser("classify", parents=[common], help="exact class and inertia of a conic")
    p.add_argument("--conic", required=True)

    p = sub.add_parser("run", parents=[common], help="execute a scene file")
    p.add_argument("scene")

    p = sub.add_parser("render", parents=[common], help="render a built-in figure to SVG")
    p.add_argument("figure", choices=sorted(FIGURES))
    p.add_argument("--viewport", default=None, help="xmin,ymin,xmax,ymax (rationals)")
    p.add_argument("--width", type=int, default=640)

    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("suites", nargs="*", help=f"suite ids ({', '.join(ALL_SUITES)})")
    p.add_argument("--all", action="store_true", help="run every suite")

    return parser


def _cmd_polar(args) -> int:
    print(str(polar(_parse_conic(args.conic), _parse_point(args.point))))
    return 0


def _cmd_pole(args) -> int:
    print(str(pole(_parse_conic(args.conic), _parse_line(args.line))))
    return 0


def _cmd_traversale(args) -> int:
    conic = _parse_conic(args.conic)
    point = _parse_point(args.point)
    constructed = traversale_from_quadrangle(conic, point)
    algebraic = polar(conic, point)
    agree = constructed == algebraic
    print(f"traversale {constructed}")
    print(f"polar      {algebraic}")
    print(f"agreement  {'exact' if agree else 'MISMATCH'}")
    if args.transcript:
        with open(args.transcript, "w", encoding="utf-8") as fh:
            fh.write(traversale_construction_transcript(conic, point))
        print(f"transcript {args.transcript}")
    return 0 if agree else 1


def _cmd_involution(args) -> int:
    if len(args.pair) != 2:
        raise _InputError("exactly two --pair couples determine an involution")
    chart = canonical_chart(PLine(0, 1, 0))
    inv = involution_from_two_pairs(_parse_pair(args.pair[0]), _parse_pair(args.pair[1]), chart)
    kind, fixed = classify_and_fixed_points(inv)
    print(f"matrix {inv.matrix}")
    print(f"kind {kind.value}")
    if fixed is not None:
        print("fixed " + " ".join(format_extended(t) for t in fixed))
    print(f"souche {format_extended(souche_of(inv))}")
    return 0


def _cmd_classify(args) -> int:
    result = classify(_parse_conic(args.conic))
    print(f"class {result.kind.value}")
    print(f"signature ({result.signature[0]}, {result.signature[1]})")
    print(f"rank {result.rank}")
    if result.point_double is not None:
        print(f"point-double {result.point_double}")
    if result.double_line is not None:
        print(f"double-line {result.double_line}")
    return 0


def _cmd_run(args) -> int:
    report = run_scene(args.scene)
    text = report.to_text()
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0 if report.passed else 1


def _cmd_render(args) -> int:
    viewport = _parse_viewport(args.viewport) if args.viewport else None
    svg = render_figure(args.figure, viewport=viewport, width=args.width)
    out = args.out or f"{args.figure}.svg"
    with open(out, "w", encoding="utf-8") as fh:
        fh.write(svg)
    print(f"wrote {out}")
    return 0


def _cmd_verify(args) -> int:
    seed = _effective_seed(args)
    if args.all or not args.suites:
        reports = verify_all(seed, args.cases)
    else:
        reports = [verify_suite(name, seed, args.cases) for name in args.suites]
    text = "\n".join(r.to_text() for r in reports)
    sys.stdout.write(text)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    return 0 if all(r.passed for r in reports) else 1


_HANDLERS = {
    "polar": _cmd_polar,
    "pole": _cmd_pole,
    "traversale": _cmd_traversale,
    "involution": _cmd_involution,
    "classify": _cmd_classify,
    "run": _cmd_run,
    "render": _cmd_render,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except (_InputError, SceneError, GeometryError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
