"""The rational Cartesian plane as a concrete Hilbert plane.

Points have exact rational coordinates.  Incidence, betweenness and side
tests are exact sign computations.  Segment lengths are carried squared so
that congruence (equal length) and comparison stay inside the rationals;
the irrational length ratio is produced as a certified enclosure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    DomainError,
    PrecisionError,
    RatInterval,
    RatLike,
    as_rat,
    precision_cap,
    rat_sqrt,
    sqrt_enclosure,
)


@dataclass(frozen=True, slots=True)
class Point:
    x: Fraction
    y: Fraction

    def __post_init__(self):
        if type(self.x) is not Fraction:
            object.__setattr__(self, "x", as_rat(self.x))
        if type(self.y) is not Fraction:
            object.__setattr__(self, "y", as_rat(self.y))

    def __add__(self, v: Point) -> Point:
        return Point(self.x + v.x, self.y + v.y)

    def __sub__(self, other: Point) -> Point:
        return Point(self.x - other.x, self.y - other.y)

    def scale(self, k: RatLike) -> Point:
        k = as_rat(k)
        return Point(self.x * k, self.y * k)

    def dot(self, other: Point) -> Fraction:
        return self.x * other.x + self.y * other.y

    def cross(self, other: Point) -> Fraction:
        return self.x * other.y - self.y * other.x

    def norm2(self) -> Fraction:
        return self.dot(self)


@dataclass(frozen=True, slots=True)
class Segment:
    """Non-degenerate segment; its endpoints must differ."""

    a: Point
    b: Point

    def __post_init__(self):
        if self.a == self.b:
            raise DomainError("a segment needs two distinct endpoints")


@dataclass(frozen=True, slots=True)
class Ray:
    origin: Point
    through: Point

    def __post_init__(self):
        if self.origin == self.through:
            raise DomainError("a ray needs two distinct points")

    @property
    def direction(self) -> Point:
        return self.through - self.origin

    def contains(self, p: Point) -> bool:
        d, v = self.direction, p - self.origin
        return d.cross(v) == 0 and d.dot(v) >= 0


@dataclass(frozen=True, slots=True, order=True)
class SqLength:
    """Squared Euclidean length; equal values mean congruent segments."""

    value: Fraction

    def __post_init__(self):
        v = as_rat(self.value)
        if v <= 0:
            raise DomainError(f"a squared length must be positive, got {v}")
        object.__setattr__(self, "value", v)


def orientation(a: Point, b: Point, c: Point) -> Fraction:
    """Twice the signed area of triangle abc (counterclockwise positive)."""
    return (b - a).cross(c - a)


def collinear(a: Point, b: Point, c: Point) -> bool:
    return orientation(a, b, c) == 0


def betweenness(a: Point, b: Point, c: Point) -> bool:
    """True iff ``b`` lies strictly between distinct collinear ``a`` and ``c``."""
    if a == b or b == c or a == c:
        return False
    if orientation(a, b, c) != 0:
        return False
    return (b - a).dot(c - b) > 0


def side_of_line(p: Point, line: tuple[Point, Point]) -> int:
    """Sign of ``p`` relative to the directed line through ``line``: +1 left, -1 right, 0 on it."""
    a, b = line
    if a == b:
        raise DomainError("a line needs two distinct points")
    o = orientation(a, b, p)
    return (o > 0) - (o < 0)


def sq_length(s: Segment) -> SqLength:
    return SqLength((s.a - s.b).norm2())


def congruent_segments(s: Segment, t: Segment) -> bool:
    return sq_length(s) == sq_length(t)


def _sb_steps(a: int, b: int, c: int, d: int, below) -> int:
    """Largest k >= 0 with below(a + k*c, b + k*d), assuming below(a, b) holds."""
    hi = 1
    while below(a + hi * c, b + hi * d):
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if below(a + mid * c, b + mid * d):
            lo = mid
        else:
            hi = mid
    return lo


def length_ratio(x: SqLength, y: SqLength, max_width: RatLike = Fraction(1, 10**9)) -> RatInterval:
    """Enclose the ratio of the lengths whose squares are ``x`` and ``y``.

    The ratio is the supremum of fractions ``a/b`` with ``a*len(y) <= b*len(x)``;
    that comparison is decided exactly as ``a**2 * y <= b**2 * x``.  The search
    walks the Stern-Brocot tree, taking each run of same-direction moves in one
    batch, so it stops after O(log) comparisons per continued-fraction term.
    """
    max_width = as_rat(max_width)
    if max_width <= 0:
        raise DomainError("max_width must be positive")
    xv, yv = x.value, y.value
    exact = rat_sqrt(xv / yv)
    if exact is not None:
        return RatInterval(exact, exact)

    def below(p: int, q: int) -> bool:
        return p * p * yv <= q * q * xv

    # lo = a/b satisfies below(); hi = c/d does not (1/0 stands for infinity).
    a, b, c, d = 0, 1, 1, 0
    cap = precision_cap()
    for _ in range(cap):
        if d and Fraction(c, d) - Fraction(a, b) <= max_width:
            return RatInterval(Fraction(a, b), Fraction(c, d))
        # The mediant of the bracket is never equal to the irrational target.
        if below(a + c, b + d):
            k = _sb_steps(a, b, c, d, below)
            a, b = a + k * c, b + k * d
        else:
            k = _sb_steps(c, d, a, b, lambda p, q: not below(p, q))
            c, d = c + k * a, d + k * b
    raise PrecisionError(f"length ratio not resolved to width {max_width} within {cap} steps")


def add_lengths(x: SqLength, y: SqLength, max_width: RatLike = Fraction(1, 10**9)) -> RatInterval:
    """Enclose the squared length of two segments laid end to end.

    That is ``(sqrt(x) + sqrt(y))**2 = x + y + 2*sqrt(x*y)``; exact whenever
    ``x*y`` is a rational square.
    """
    max_width = as_rat(max_width)
    if max_width <= 0:
        raise DomainError("max_width must be positive")
    cross = sqrt_enclosure(x.value * y.value, max_width / 2)
    return 2 * cross + (x.value + y.value)


def line_intersection(p1: Point, p2: Point, q1: Point, q2: Point) -> Point | None:
    """Exact meet of lines p1p2 and q1q2, or ``None`` when they are parallel."""
    r, s = p2 - p1, q2 - q1
    den = r.cross(s)
    if den == 0:
        return None
    t = (q1 - p1).cross(s) / den
    return p1 + r.scale(t)
