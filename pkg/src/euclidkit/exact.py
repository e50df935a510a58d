"""Exact rationals and outward-rounded rational intervals.

Every quantity in the trusted core is a :class:`fractions.Fraction` or a
:class:`RatInterval` whose endpoints are fractions.  Irrational values only
ever appear as certified enclosures; floats are never used.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Union

Rat = Fraction
RatLike = Union[int, str, Fraction, Decimal]

#: Default bound on refinement loops (bits of precision or search steps).
DEFAULT_PRECISION_CAP = 4096


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class PrecisionError(ArithmeticError):
    """The requested precision could not be reached under the refinement cap."""


class ConsistencyError(AssertionError):
    """Two enclosures that must share a real value turned out disjoint."""


def precision_cap() -> int:
    """Refinement cap, overridable through ``EUCLID_PRECISION_CAP``."""
    raw = os.environ.get("EUCLID_PRECISION_CAP")
    if not raw:
        return DEFAULT_PRECISION_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise DomainError(f"EUCLID_PRECISION_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise DomainError("EUCLID_PRECISION_CAP must be positive")
    return cap


def as_rat(value: RatLike) -> Fraction:
    """Convert ints, ``"p/q"`` strings, decimal literals and Decimals exactly.

    Floats are refused: a float has already been rounded.
    """
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a string such as '0.1' or '1/10'")
    if isinstance(value, Fraction):
        return value
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational literal: {value!r}") from exc


def rat_sqrt(x: Fraction) -> Fraction | None:
    """Exact square root of ``x`` if it is a rational square, else ``None``."""
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = math.isqrt(n), math.isqrt(d)
    if rn * rn == n and rd * rd == d:
        return Fraction(rn, rd)
    return None


def floor_dyadic(x: Fraction, bits: int) -> Fraction:
    return Fraction((x.numerator << bits) // x.denominator, 1 << bits)


def ceil_dyadic(x: Fraction, bits: int) -> Fraction:
    return Fraction(-((-x.numerator << bits) // x.denominator), 1 << bits)


def bits_for_width(width: Fraction) -> int:
    """Least ``k >= 0`` with ``2**-k <= width``."""
    if width <= 0:
        raise DomainError("width must be positive")
    k = 0
    while Fraction(1, 1 << k) > width:
        k += 1
    return k


@dataclass(frozen=True, slots=True)
class RatInterval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rat(self.lo), as_rat(self.hi)
        if lo > hi:
            raise DomainError(f"empty interval [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x: RatLike) -> RatInterval:
        x = as_rat(x)
        return cls(x, x)

    @classmethod
    def coerce(cls, x) -> RatInterval:
        return x if isinstance(x, RatInterval) else cls.point(x)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def is_exact(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        if isinstance(x, RatInterval):
            return self.lo <= x.lo and x.hi <= self.hi
        return self.lo <= as_rat(x) <= self.hi

    def overlaps(self, other: RatInterval) -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __add__(self, other) -> RatInterval:
        other = RatInterval.coerce(other)
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __neg__(self) -> RatInterval:
        return RatInterval(-self.hi, -self.lo)

    def __sub__(self, other) -> RatInterval:
        other = RatInterval.coerce(other)
        return RatInterval(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other) -> RatInterval:
        return RatInterval.coerce(other) - self

    def __mul__(self, other) -> RatInterval:
        other = RatInterval.coerce(other)
        if other.is_exact:
            k = other.lo
            return RatInterval(self.lo * k, self.hi * k) if k >= 0 else RatInterval(self.hi * k, self.lo * k)
        p = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return RatInterval(min(p), max(p))

    __rmul__ = __mul__

    def __truediv__(self, other) -> RatInterval:
        other = RatInterval.coerce(other)
        if other.lo <= 0 <= other.hi:
            raise DomainError(f"division by an interval containing zero: {other}")
        return self * RatInterval(1 / other.hi, 1 / other.lo)

    def __rtruediv__(self, other) -> RatInterval:
        return RatInterval.coerce(other) / self

    def square(self) -> RatInterval:
        """Tight square; unlike ``X * X`` it knows both factors are equal."""
        a, b = self.lo * self.lo, self.hi * self.hi
        if self.lo >= 0:
            return RatInterval(a, b)
        if self.hi <= 0:
            return RatInterval(b, a)
        return RatInterval(Fraction(0), max(a, b))

    def abs(self) -> RatInterval:
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return RatInterval(Fraction(0), max(-self.lo, self.hi))

    def sign(self) -> int | None:
        """Certified sign, or ``None`` when the interval straddles zero."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    def intersect(self, other: RatInterval) -> RatInterval:
        """Meet of two enclosures of the same real.

        An empty result means one of the enclosures was not sound.
        """
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        if lo > hi:
            raise ConsistencyError(f"disjoint enclosures {self} and {other}")
        return RatInterval(lo, hi)

    def hull(self, other: RatInterval) -> RatInterval:
        return RatInterval(min(self.lo, other.lo), max(self.hi, other.hi))

    def clamp(self, lo: Fraction, hi: Fraction) -> RatInterval:
        """Intersect with a range the enclosed value is known to lie in."""
        return RatInterval(min(max(self.lo, lo), hi), max(min(self.hi, hi), lo))

    def round_out(self, bits: int) -> RatInterval:
        """Snap endpoints outward to the grid ``2**-bits`` to bound their size."""
        if self.lo.denominator <= (1 << bits) and self.hi.denominator <= (1 << bits):
            return self
        return RatInterval(floor_dyadic(self.lo, bits), ceil_dyadic(self.hi, bits))

    def __str__(self) -> str:
        return f"[{self.lo}, {self.hi}]"


def add(x: RatInterval, y: RatInterval) -> RatInterval:
    return x + y


def sub(x: RatInterval, y: RatInterval) -> RatInterval:
    return x - y


def mul(x: RatInterval, y: RatInterval) -> RatInterval:
    return x * y


def div(x: RatInterval, y: RatInterval) -> RatInterval:
    return x / y


def neg(x: RatInterval) -> RatInterval:
    return -x


def intersect(x: RatInterval, y: RatInterval) -> RatInterval:
    return x.intersect(y)


def sqrt_enclosure(x: RatLike, max_width: RatLike) -> RatInterval:
    """Enclose ``sqrt(x)`` in an interval of width at most ``max_width``.

    Perfect rational squares give a degenerate interval.  Otherwise the
    endpoints are consecutive points of the dyadic grid ``2**-k`` chosen from
    ``max_width``, so halving the width yields a nested interval.
    """
    x, max_width = as_rat(x), as_rat(max_width)
    if x < 0:
        raise DomainError(f"square root of negative number {x}")
    if max_width <= 0:
        raise DomainError("max_width must be positive")
    root = rat_sqrt(x)
    if root is not None:
        return RatInterval(root, root)
    k = bits_for_width(max_width)
    # m = floor(sqrt(x) * 2**k): m**2 <= x * 4**k < (m + 1)**2
    m = math.isqrt((x.numerator << (2 * k)) // x.denominator)
    return RatInterval(Fraction(m, 1 << k), Fraction(m + 1, 1 << k))


def sqrt_interval(x: RatInterval, max_width: RatLike) -> RatInterval:
    """Enclose ``{sqrt(t) : t in x}``; extra width beyond the exact image is at most ``max_width``."""
    if x.hi < 0:
        raise DomainError(f"square root of negative interval {x}")
    if x.is_exact:
        return sqrt_enclosure(x.lo, max_width)
    lo = sqrt_enclosure(max(x.lo, Fraction(0)), max_width).lo
    return RatInterval(lo, sqrt_enclosure(x.hi, max_width).hi)


def format_decimal(x: Fraction, digits: int, direction: str) -> str:
    """Render ``x`` with ``digits`` fractional digits, rounding ``'down'`` or ``'up'``."""
    scale = 10**digits
    if direction == "down":
        q = (x.numerator * scale) // x.denominator
    elif direction == "up":
        q = -((-x.numerator * scale) // x.denominator)
    else:
        raise ValueError(f"direction must be 'down' or 'up', not {direction!r}")
    sign = "-" if q < 0 else ""
    q = abs(q)
    whole, frac = divmod(q, scale)
    if digits == 0:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
