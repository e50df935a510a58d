"""Angles, geometric angles and generalized angles.

A geometric angle (congruence class of an angle) between rational rays is
represented by the rational number ``sign(cos a) * cos(a)**2``.  On proper
angles ``0 < a < pi`` this map is strictly decreasing, so it is a complete
invariant: two angles are congruent exactly when their invariants agree,
and the larger angle has the smaller invariant.

When both cosine and sine of a class are rational ("rational-circle"
angles) the class is a point of the rational unit circle, and sums of such
angles are computed exactly with the rotation group law.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Optional

from .exact import DomainError, RatInterval, RatLike, as_rat, rat_sqrt
from .plane import Point, Ray, side_of_line


class Ordering(enum.IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class Location(enum.Enum):
    """Position of a point relative to an angle."""

    INSIDE = "inside"
    OUTSIDE = "outside"
    BOUNDARY = "boundary"


@dataclass(frozen=True, slots=True)
class Angle:
    """Union of two distinct, non-opposite rays sharing an origin."""

    leg1: Ray
    leg2: Ray

    def __post_init__(self):
        if self.leg1.origin != self.leg2.origin:
            raise DomainError("the legs of an angle must share their origin")
        if self.leg1.direction.cross(self.leg2.direction) == 0:
            raise DomainError("an angle needs two distinct and non-opposite rays")

    @classmethod
    def from_points(cls, apex: Point, b: Point, c: Point) -> Angle:
        """The angle at ``apex`` with legs through ``b`` and ``c``."""
        return cls(Ray(apex, b), Ray(apex, c))

    @property
    def apex(self) -> Point:
        return self.leg1.origin

    def geometric(self) -> ProperAngle:
        return angle_from_points(self.apex, self.leg1.through, self.leg2.through)


def _sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@total_ordering
@dataclass(frozen=True, slots=True, eq=False)
class ProperAngle:
    """Congruence class of a proper angle.

    ``inv`` is the signed squared cosine and lies in ``(-1, 1)``.  ``rational_sin``
    is filled in automatically when both cosine and sine are rational.
    Comparison operators follow angle size, not the invariant.
    """

    inv: Fraction
    rational_sin: Optional[Fraction] = None

    def __post_init__(self):
        inv = as_rat(self.inv)
        if not -1 < inv < 1:
            raise DomainError(f"signed cos^2 invariant {inv} is not that of a proper angle")
        object.__setattr__(self, "inv", inv)
        c = self.rational_cos
        s = None
        if c is not None:
            s = rat_sqrt(1 - c * c)
        if self.rational_sin is not None:
            given = as_rat(self.rational_sin)
            if s is None or given != s:
                raise DomainError(f"{given} is not the sine of the class with invariant {inv}")
        object.__setattr__(self, "rational_sin", s)

    @classmethod
    def from_cos_sin(cls, c: RatLike, s: RatLike) -> ProperAngle:
        """Class of the rational unit-circle point ``(c, s)`` with ``s > 0``."""
        c, s = as_rat(c), as_rat(s)
        if c * c + s * s != 1 or s <= 0:
            raise DomainError(f"({c}, {s}) is not on the open upper rational half circle")
        return cls(_sign(c) * c * c, s)

    @property
    def rational_cos(self) -> Optional[Fraction]:
        r = rat_sqrt(abs(self.inv))
        return None if r is None else _sign(self.inv) * r

    @property
    def is_rational_circle(self) -> bool:
        return self.rational_sin is not None

    @property
    def cos_sin(self) -> tuple[Fraction, Fraction]:
        if self.rational_sin is None:
            raise DomainError("cosine and sine of this class are not both rational")
        return self.rational_cos, self.rational_sin

    def __eq__(self, other):
        if not isinstance(other, ProperAngle):
            return NotImplemented
        return self.inv == other.inv

    def __hash__(self):
        return hash(self.inv)

    def __lt__(self, other):
        if not isinstance(other, ProperAngle):
            return NotImplemented
        return self.inv > other.inv

    def __repr__(self):
        extra = f", sin={self.rational_sin}" if self.rational_sin is not None else ""
        return f"ProperAngle(inv={self.inv}{extra})"


RIGHT = ProperAngle(Fraction(0))


def angle_from_points(a: Point, b: Point, c: Point) -> ProperAngle:
    """Geometric angle of the angle at ``a`` with legs through ``b`` and ``c``."""
    u, v = b - a, c - a
    if u.norm2() == 0 or v.norm2() == 0:
        raise DomainError("an angle needs two distinct and non-opposite rays (coincident points)")
    cr = u.cross(v)
    if cr == 0:
        raise DomainError("an angle needs two distinct and non-opposite rays")
    dot = u.dot(v)
    n = u.norm2() * v.norm2()
    return ProperAngle(_sign(dot) * dot * dot / n)


def congruent(alpha: ProperAngle, beta: ProperAngle) -> bool:
    return alpha.inv == beta.inv


def compare(alpha: ProperAngle, beta: ProperAngle) -> Ordering:
    """Size order of two geometric angles."""
    if alpha.inv == beta.inv:
        return Ordering.EQ
    return Ordering.LT if alpha.inv > beta.inv else Ordering.GT


def supplement(alpha: ProperAngle) -> ProperAngle:
    return ProperAngle(-alpha.inv)


def addable(alpha: ProperAngle, beta: ProperAngle) -> bool:
    """True iff each angle is less than the supplement of the other."""
    return compare(alpha, supplement(beta)) is Ordering.LT


def rotate_compose(p: tuple[RatLike, RatLike], q: tuple[RatLike, RatLike]) -> tuple[Fraction, Fraction]:
    """Product of two rational unit-circle points (rotation composition)."""
    c1, s1 = map(as_rat, p)
    c2, s2 = map(as_rat, q)
    for c, s in ((c1, s1), (c2, s2)):
        if c * c + s * s != 1:
            raise DomainError(f"({c}, {s}) is not on the unit circle")
    return c1 * c2 - s1 * s2, c1 * s2 + s1 * c2


def inside(p: Point, angle: Angle) -> Location:
    """Whether ``p`` is on the same side of each leg's line as the other leg."""
    a = angle.apex
    b, c = angle.leg1.through, angle.leg2.through
    side_b = side_of_line(p, (a, b))
    side_c = side_of_line(p, (a, c))
    if side_b == 0 and angle.leg1.contains(p) or side_c == 0 and angle.leg2.contains(p):
        return Location.BOUNDARY
    if side_b == side_of_line(c, (a, b)) and side_c == side_of_line(b, (a, c)):
        return Location.INSIDE
    return Location.OUTSIDE


@total_ordering
@dataclass(frozen=True, slots=True)
class GeneralizedAngle:
    """Formal sum ``half_turns * pi + residual`` with residual proper or zero.

    ``residual=None`` is the zero angle.
    """

    half_turns: int = 0
    residual: Optional[ProperAngle] = None

    def __post_init__(self):
        if not isinstance(self.half_turns, int) or self.half_turns < 0:
            raise DomainError("half_turns must be a non-negative integer")

    @property
    def is_zero(self) -> bool:
        return self.half_turns == 0 and self.residual is None

    def _key(self):
        r = self.residual
        return (self.half_turns, 0 if r is None else 1, Fraction(0) if r is None else -r.inv)

    def __lt__(self, other):
        if not isinstance(other, GeneralizedAngle):
            return NotImplemented
        return self._key() < other._key()

    def __str__(self):
        r = "0" if self.residual is None else f"angle(inv={self.residual.inv})"
        return f"{self.half_turns} half-turn + {r}"


HALF_TURN = GeneralizedAngle(1)


@dataclass(frozen=True, slots=True)
class EnclosedAngle:
    """Generalized angle whose residual is known only through its measure.

    ``residual_halfturns`` encloses the residual divided by a half-turn and lies
    in ``[0, 1]``.
    """

    half_turns: int
    residual_halfturns: RatInterval

    def __str__(self):
        return f"{self.half_turns} half-turn + {self.residual_halfturns} half-turn"


def _as_general(x) -> GeneralizedAngle:
    if isinstance(x, GeneralizedAngle):
        return x
    if isinstance(x, ProperAngle):
        return GeneralizedAngle(0, x)
    raise TypeError(f"not an angle: {x!r}")


def add_general(g, h, max_width: RatLike = Fraction(1, 10**9)):
    """Sum of two generalized angles, carrying a half-turn when needed.

    Rational-circle residuals are added exactly through the rotation group
    law.  Supplementary residuals give an exact extra half-turn.  Anything
    else falls back to measure enclosures; the carry is still exact when it
    can be read off the invariants, and otherwise must be separated from the
    half-turn boundary at the requested width.
    """
    from . import measure  # measure depends on this module

    max_width = as_rat(max_width)
    if isinstance(g, (measure.MeasuredAngle, EnclosedAngle)) or isinstance(h, (measure.MeasuredAngle, EnclosedAngle)):
        return measure.add_measured(g, h, max_width)
    g, h = _as_general(g), _as_general(h)
    turns = g.half_turns + h.half_turns
    a, b = g.residual, h.residual
    if a is None or b is None:
        return GeneralizedAngle(turns, a if b is None else b)
    if a.inv == -b.inv:
        return GeneralizedAngle(turns + 1, None)
    if a.is_rational_circle and b.is_rational_circle:
        c, s = rotate_compose(a.cos_sin, b.cos_sin)
        if s > 0:
            return GeneralizedAngle(turns, ProperAngle.from_cos_sin(c, s))
        # s == 0 would mean a + b is a multiple of pi, handled above.
        return GeneralizedAngle(turns + 1, ProperAngle.from_cos_sin(-c, -s))
    carry = 0 if addable(a, b) else 1
    ta = measure.theta(a, max_width / 2).halfturn_fraction
    tb = measure.theta(b, max_width / 2).halfturn_fraction
    rest = (ta + tb - carry).clamp(Fraction(0), Fraction(1))
    return EnclosedAngle(turns + carry, rest)


__all__ = [
    "Angle",
    "EnclosedAngle",
    "GeneralizedAngle",
    "HALF_TURN",
    "Location",
    "Ordering",
    "ProperAngle",
    "RIGHT",
    "add_general",
    "addable",
    "angle_from_points",
    "compare",
    "congruent",
    "inside",
    "rotate_compose",
    "supplement",
]
