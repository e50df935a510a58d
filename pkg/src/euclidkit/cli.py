"""Command-line front end.

Every printed value carries its unit; enclosure endpoints are printed with
the lower end rounded down and the upper end rounded up.  Coordinates may
be integers, decimal literals or ``p/q``; put ``--`` before negative
fractions such as ``-1/2`` so they are not taken for options.

Exit codes: 0 success, 2 bad input, 3 precision not reached, 4 axiom failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import axioms as axiom_suite
from .angles import EnclosedAngle, GeneralizedAngle, add_general, angle_from_points
from .exact import DomainError, PrecisionError, RatInterval, as_rat, format_decimal
from .measure import Unit, pi_doublings_for, pi_enclosure, theta
from .plane import Point, Segment, length_ratio, sq_length

EXIT_OK, EXIT_INPUT, EXIT_PRECISION, EXIT_AXIOM = 0, 2, 3, 4
DEFAULT_WIDTH = "1e-9"


@dataclass(frozen=True)
class OutputRecord:
    enclosure: RatInterval
    unit: str
    exact: Optional[Fraction] = None

    @classmethod
    def of(cls, enclosure: RatInterval, unit: str) -> OutputRecord:
        return cls(enclosure, unit, enclosure.lo if enclosure.is_exact else None)

    def digits(self) -> int:
        w = self.enclosure.width
        if w == 0:
            return 12
        return min(80, max(6, math.ceil(-math.log10(w)) + 3))

    def fields(self) -> dict[str, str]:
        d = self.digits()
        out = {}
        if self.exact is not None:
            out["exact"] = str(self.exact)
        out["lo"] = format_decimal(self.enclosure.lo, d, "down")
        out["hi"] = format_decimal(self.enclosure.hi, d, "up")
        out["width"] = format_decimal(self.enclosure.width, d, "up")
        out["unit"] = self.unit
        return out

    def render(self, machine: bool = False) -> str:
        f = self.fields()
        if machine:
            return " ".join(f"{k}={v}" for k, v in f.items())
        if self.exact is not None:
            return f"{f['exact']} {self.unit} (exact)"
        return (
            f"lo    = {f['lo']} {self.unit} (rounded down)\n"
            f"hi    = {f['hi']} {self.unit} (rounded up)\n"
            f"width = {f['width']} {self.unit}"
        )


def _rat(text: str) -> Fraction:
    try:
        return as_rat(text)
    except DomainError:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _width(text: str) -> Fraction:
    w = _rat(text)
    if w <= 0:
        raise argparse.ArgumentTypeError("width must be positive")
    return w


def _points(coords: Sequence[Fraction]) -> list[Point]:
    return [Point(coords[i], coords[i + 1]) for i in range(0, len(coords), 2)]


def _measure_in(angle, unit: Unit, width: Fraction) -> RatInterval:
    if unit is Unit.HALFTURN:
        return theta(angle, width).halfturns()
    if unit is Unit.DEGREE:
        return theta(angle, width / 180).degrees()
    return theta(angle, width / 8).radians(width)


def cmd_pi(args) -> int:
    if args.digits is not None:
        k = pi_doublings_for(Fraction(1, 10**args.digits))
    else:
        k = args.doublings
    p = pi_enclosure(k)
    print(f"polygon sides = {p.sides} (doublings = {k})")
    print(OutputRecord.of(p.bounds, "dimensionless").render(args.machine))
    return EXIT_OK


def cmd_measure(args) -> int:
    a, b, c = _points(args.coords)
    angle = angle_from_points(a, b, c)
    unit = Unit(args.unit)
    print(OutputRecord.of(_measure_in(angle, unit, args.width), unit.value).render(args.machine))
    return EXIT_OK


def cmd_ratio(args) -> int:
    a, b, c, d = _points(args.coords)
    r = length_ratio(sq_length(Segment(a, b)), sq_length(Segment(c, d)), args.width)
    print(OutputRecord.of(r, "dimensionless").render(args.machine))
    return EXIT_OK


def _describe(g) -> str:
    if isinstance(g, GeneralizedAngle):
        return str(g)
    if isinstance(g, EnclosedAngle):
        r = g.residual_halfturns
        d = OutputRecord.of(r, "halfturn").digits()
        return (
            f"{g.half_turns} half-turn + "
            f"[{format_decimal(r.lo, d, 'down')}, {format_decimal(r.hi, d, 'up')}] halfturn"
        )
    return f"{g.half_turns} half-turn + {g.halfturns - g.half_turns} halfturn"


def cmd_sum(args) -> int:
    pts = _points(args.coords)
    first = GeneralizedAngle(args.turns[0], angle_from_points(*pts[:3]))
    second = GeneralizedAngle(args.turns[1], angle_from_points(*pts[3:]))
    unit = Unit(args.unit)
    # residual enclosure must already fit the widest unit scaling (degrees)
    total = add_general(first, second, args.width / 1440)
    print(f"sum = {_describe(total)}")
    print(OutputRecord.of(_measure_in(total, unit, args.width), unit.value).render(args.machine))
    return EXIT_OK


def cmd_axioms(args) -> int:
    model = axiom_suite.MUTANTS[args.mutant] if args.mutant else axiom_suite.RATIONAL_PLANE
    reports = axiom_suite.run_axiom_suite(args.seed, args.cases, model=model, workers=args.workers)
    print(axiom_suite.format_report(reports))
    failed = any(r.status is axiom_suite.Status.FAILS for r in reports)
    return EXIT_AXIOM if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="euclidkit",
        description="Certified angle measurement and plane-axiom checks over the rational plane.",
        epilog="Refinement loops are bounded by the EUCLID_PRECISION_CAP environment variable (default 4096).",
    )
    parser.add_argument("--machine", action="store_true", help="print key=value records")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pi", help="bounds on pi from regular polygons")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--doublings", type=int, help="polygon with 6*2**k sides")
    g.add_argument("--digits", type=int, help="least polygon giving width <= 10**-d")
    p.set_defaults(func=cmd_pi)

    unit_help = "radian, degree or halfturn (default: radian)"
    width_help = f"maximum enclosure width in the output unit (default: {DEFAULT_WIDTH})"

    p = sub.add_parser("measure", help="measure of the angle at A between rays AB and AC")
    p.add_argument("coords", nargs=6, type=_rat, metavar="AX AY BX BY CX CY")
    p.add_argument("--unit", choices=[u.value for u in Unit], default="radian", help=unit_help)
    p.add_argument("--width", type=_width, default=_width(DEFAULT_WIDTH), help=width_help)
    p.set_defaults(func=cmd_measure)

    p = sub.add_parser("ratio", help="ratio of the lengths of segments AB and CD")
    p.add_argument("coords", nargs=8, type=_rat, metavar="AX AY BX BY CX CY DX DY")
    p.add_argument("--width", type=_width, default=_width(DEFAULT_WIDTH), help=width_help)
    p.set_defaults(func=cmd_ratio)

    p = sub.add_parser("sum", help="sum of the angles BAC and EDF, with half-turn carry")
    p.add_argument("coords", nargs=12, type=_rat, metavar="COORD")
    p.add_argument("--turns", nargs=2, type=int, default=[0, 0], metavar=("A", "B"),
                   help="extra half-turns on each summand (default: 0 0)")
    p.add_argument("--unit", choices=[u.value for u in Unit], default="radian", help=unit_help)
    p.add_argument("--width", type=_width, default=_width(DEFAULT_WIDTH), help=width_help)
    p.set_defaults(func=cmd_sum)

    p = sub.add_parser("axioms", help="randomized axiom suite")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--cases", type=int, default=10_000, help="cases per axiom (default: 10000)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--mutant", choices=sorted(axiom_suite.MUTANTS), help="run against a faulty model")
    p.set_defaults(func=cmd_axioms)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except PrecisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PRECISION
    except (DomainError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
