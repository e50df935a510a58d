"""Angular measure: chord ratio, certified arc measure, pi, units.

A geometric angle and its measure are different objects here.  The
measure of an angle is returned as a :class:`MeasureEnclosure`, which
stores an exact rational enclosure of the angle divided by a half-turn.
Radians only appear when that fraction is multiplied by a certified
enclosure of pi from inscribed and circumscribed regular polygons.

The measure of a proper angle is read off one binary digit at a time.
With ``b`` the part of the angle not yet accounted for (``0 <= b < pi``),
doubling ``b`` passes ``pi`` exactly when ``cos b <= 0``, and the cosine of
the reduced double angle is ``+-(2 cos(b)**2 - 1)``.  Starting from the
signed squared cosine, the first step is exact rational arithmetic, so
dyadic and small periodic fractions (right angle, 60 degrees, ...) come
out exact; all other classes continue with rounded interval arithmetic.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .angles import EnclosedAngle, GeneralizedAngle, ProperAngle, Angle
from .exact import (
    DomainError,
    PrecisionError,
    RatInterval,
    RatLike,
    as_rat,
    bits_for_width,
    precision_cap,
    sqrt_enclosure,
    sqrt_interval,
)
from .plane import SqLength

_ZERO, _ONE = Fraction(0), Fraction(1)


class Unit(str, enum.Enum):
    RADIAN = "radian"
    DEGREE = "degree"
    HALFTURN = "halfturn"


@dataclass(frozen=True, slots=True)
class MeasuredAngle:
    """Angle given directly as an exact multiple of the half-turn.

    This is how classes such as the degree (1/180 of a half-turn), whose
    cosine is irrational, enter the kernel.
    """

    halfturns: Fraction

    def __post_init__(self):
        q = as_rat(self.halfturns)
        if q <= 0:
            raise DomainError("a measured angle must be a positive multiple of the half-turn")
        object.__setattr__(self, "halfturns", q)

    @property
    def is_proper(self) -> bool:
        return self.halfturns < 1

    @property
    def half_turns(self) -> int:
        return self.halfturns.numerator // self.halfturns.denominator


def from_halfturn_fraction(q: RatLike) -> MeasuredAngle:
    return MeasuredAngle(as_rat(q))


@dataclass(frozen=True, slots=True)
class PiEnclosure:
    doublings: int
    bounds: RatInterval

    @property
    def sides(self) -> int:
        return 6 << self.doublings


@dataclass(frozen=True, slots=True)
class MeasureEnclosure:
    """Certified enclosure of an angular measure, stored in half-turns."""

    halfturn_fraction: RatInterval
    pi_doublings: int = 16

    def halfturns(self) -> RatInterval:
        return self.halfturn_fraction

    def degrees(self) -> RatInterval:
        return 180 * self.halfturn_fraction

    def radians(self, max_width: RatLike | None = None) -> RatInterval:
        """Radian view; with ``max_width`` the pi enclosure is refined to fit."""
        if max_width is None:
            return self.halfturn_fraction * pi_enclosure(self.pi_doublings).bounds
        max_width = as_rat(max_width)
        base = 4 * self.halfturn_fraction.width
        if base >= max_width:
            raise PrecisionError("half-turn enclosure too wide for the requested radian width")
        k = pi_doublings_for((max_width - base) / max(self.halfturn_fraction.hi, _ONE))
        return self.halfturn_fraction * pi_enclosure(k).bounds

    def __add__(self, other: MeasureEnclosure) -> MeasureEnclosure:
        return MeasureEnclosure(
            self.halfturn_fraction + other.halfturn_fraction,
            max(self.pi_doublings, other.pi_doublings),
        )


# -- pi ------------------------------------------------------------------------


def _monotone(f, x: RatInterval, bits: int) -> RatInterval:
    """Enclose the image of ``x`` under an increasing ``f`` given on point intervals."""
    lo = f(RatInterval.point(x.lo)).lo
    hi = f(RatInterval.point(x.hi)).hi
    return RatInterval(lo, hi).round_out(bits)


@lru_cache(maxsize=None)
def pi_enclosure(k: int) -> PiEnclosure:
    """Bounds on pi from the regular ``6 * 2**k``-gons about the unit circle.

    The inscribed side starts at 1 (hexagon side equals radius) and is halved
    by ``s -> s / sqrt(2 + sqrt(4 - s**2))``.  The circumscribed half-side
    starts at ``1/sqrt(3)`` and follows ``t -> t / (1 + sqrt(1 + t**2))``.
    """
    if k < 0:
        raise DomainError("the number of doublings must be non-negative")
    bits = 2 * k + 64
    eps = Fraction(1, 1 << (bits + 4))

    def inscribed(s: RatInterval) -> RatInterval:
        return s / sqrt_interval(2 + sqrt_interval(4 - s.square(), eps), eps)

    def circumscribed(t: RatInterval) -> RatInterval:
        return t / (1 + sqrt_interval(1 + t.square(), eps))

    s = RatInterval.point(1)
    t = sqrt_enclosure(Fraction(1, 3), eps)
    for _ in range(k):
        s = _monotone(inscribed, s, bits)
        t = _monotone(circumscribed, t, bits)
    n = 6 << k
    return PiEnclosure(k, RatInterval(n * s.lo / 2, n * t.hi))


def pi_doublings_for(width: RatLike) -> int:
    """Least number of doublings whose pi enclosure is at most ``width`` wide."""
    width = as_rat(width)
    if width <= 0:
        raise DomainError("width must be positive")
    cap = precision_cap()
    for k in range(cap):
        if pi_enclosure(k).bounds.width <= width:
            return k
    raise PrecisionError(f"pi width {width} not reached within {cap} doublings")


# -- cosine / sine enclosures -----------------------------------------------------


def _halfturn_rotations(n: int, bits: int) -> list[tuple[RatInterval, RatInterval]]:
    """(cos, sin) enclosures of pi / 2**i for i = 0 .. n, by repeated halving."""
    eps = Fraction(1, 1 << (bits + 4))
    c, s = RatInterval.point(-1), RatInterval.point(0)
    out = [(c, s), (RatInterval.point(0), RatInterval.point(1))]
    c, s = out[1]
    for _ in range(2, n + 1):
        c = sqrt_interval((1 + c) / 2, eps).clamp(_ZERO, _ONE).round_out(bits)
        s = (s / (2 * c)).round_out(bits)
        out.append((c, s))
    return out


def _compose(p, q, bits: int):
    (c1, s1), (c2, s2) = p, q
    c = (c1 * c2 - s1 * s2).clamp(-_ONE, _ONE).round_out(bits)
    s = (c1 * s2 + s1 * c2).clamp(-_ONE, _ONE).round_out(bits)
    return c, s


def _measured_cos_sin(q: Fraction, bits: int) -> tuple[RatInterval, RatInterval]:
    """cos and sin of ``q`` half-turns from the binary digits of ``q``."""
    q = q % 2
    turns, frac = divmod(q, 1)
    n = bits + 4
    work = bits + 8 + n.bit_length()
    table = _halfturn_rotations(n, work)
    acc = table[0] if turns else (RatInterval.point(1), RatInterval.point(0))
    rem = frac
    for i in range(1, n + 1):
        rem *= 2
        if rem >= 1:
            rem -= 1
            acc = _compose(acc, table[i], work)
    c, s = acc
    if rem:
        # The untreated tail is an angle in (0, pi / 2**n) and moves cos, sin by less than that.
        slack = RatInterval(Fraction(-4, 1 << n), Fraction(4, 1 << n))
        c, s = (c + slack).clamp(-_ONE, _ONE), (s + slack).clamp(-_ONE, _ONE)
    return c, s


def cos_sin_enclosure(alpha, bits: int) -> tuple[RatInterval, RatInterval]:
    """Enclosures of (cos, sin) of a proper angle, roughly ``2**-bits`` wide."""
    eps = Fraction(1, 1 << bits)
    if isinstance(alpha, Angle):
        alpha = alpha.geometric()
    if isinstance(alpha, ProperAngle):
        if alpha.is_rational_circle:
            c, s = alpha.cos_sin
            return RatInterval.point(c), RatInterval.point(s)
        sign = 1 if alpha.inv >= 0 else -1
        c = sign * sqrt_enclosure(abs(alpha.inv), eps)
        s = sqrt_enclosure(1 - abs(alpha.inv), eps)
        return c, s
    if isinstance(alpha, MeasuredAngle):
        if not alpha.is_proper:
            raise DomainError("cos/sin enclosures are only provided for proper angles")
        c, s = _measured_cos_sin(alpha.halfturns, bits)
        return c, s.clamp(_ZERO, _ONE)
    raise TypeError(f"not a proper angle: {alpha!r}")


def _refine(make, max_width: Fraction, start_bits: int) -> RatInterval:
    cap = precision_cap()
    bits = start_bits
    while bits <= cap:
        out = make(bits)
        if out.width <= max_width:
            return out
        bits *= 2
    raise PrecisionError(f"width {max_width} not reached within {cap} bits")


# -- chord ratio and measure --------------------------------------------------------


def sigma(alpha, max_width: RatLike = Fraction(1, 10**9)) -> RatInterval:
    """Chord ratio ``|BC| / |AB|`` of an isosceles angle ``BAC``: ``sqrt(2 - 2 cos a)``."""
    max_width = as_rat(max_width)
    if max_width <= 0:
        raise DomainError("max_width must be positive")
    if isinstance(alpha, ProperAngle) and alpha.rational_cos is not None:
        return sqrt_enclosure(2 - 2 * alpha.rational_cos, max_width)

    def make(bits: int) -> RatInterval:
        c, _ = cos_sin_enclosure(alpha, bits)
        return sqrt_interval((2 - 2 * c).clamp(_ZERO, Fraction(4)), Fraction(1, 1 << bits))

    return _refine(make, max_width, bits_for_width(max_width) + 4)


_EXACT_TAIL = {_ONE: _ZERO, _ZERO: Fraction(1, 2), Fraction(1, 2): Fraction(1, 3), Fraction(-1, 2): Fraction(2, 3)}


def _proper_halfturns(alpha: ProperAngle, max_width: Fraction) -> RatInterval:
    inv = alpha.inv
    if inv == 0:
        return RatInterval.point(Fraction(1, 2))
    first = 1 if inv < 0 else 0
    sign = -1 if inv < 0 else 1
    c = sign * (2 * abs(inv) - 1)
    # c is the cosine of what is left after one digit.  Rationals outside
    # the table have denominator > 2, which only grows under the doubling map,
    # so the remaining digits never become periodic.
    if c in _EXACT_TAIL:
        return RatInterval.point(Fraction(first, 2) + _EXACT_TAIL[c] / 2)
    n = max(bits_for_width(max_width), 1)
    cap = precision_cap()
    bits = 2 * n + 32
    while bits <= cap:
        digits = _extract_digits(c, n - 1, bits)
        if digits is not None:
            num = first
            for d in digits:
                num = 2 * num + d
            lo = Fraction(num, 1 << n)
            return RatInterval(lo, lo + Fraction(1, 1 << n))
        bits *= 2
    raise PrecisionError(f"binary digit undecidable within {cap} bits; raise EUCLID_PRECISION_CAP")


def _extract_digits(c: Fraction, count: int, bits: int) -> list[int] | None:
    x = RatInterval.point(c)
    digits = []
    for _ in range(count):
        sgn = x.sign()
        if sgn is None or sgn == 0:
            return None
        digits.append(1 if sgn < 0 else 0)
        x = (sgn * (2 * x.square() - 1)).clamp(-_ONE, _ONE).round_out(bits)
    return digits


def theta(alpha, max_width: RatLike = Fraction(1, 10**9)) -> MeasureEnclosure:
    """Certified measure of a (generalized) angle, ``max_width`` wide in half-turns."""
    max_width = as_rat(max_width)
    if max_width <= 0:
        raise DomainError("max_width must be positive")
    k = pi_doublings_for(max_width)
    if isinstance(alpha, Angle):
        alpha = alpha.geometric()
    if isinstance(alpha, ProperAngle):
        return MeasureEnclosure(_proper_halfturns(alpha, max_width), k)
    if isinstance(alpha, MeasuredAngle):
        return MeasureEnclosure(RatInterval.point(alpha.halfturns), k)
    if isinstance(alpha, GeneralizedAngle):
        rest = RatInterval.point(0) if alpha.residual is None else _proper_halfturns(alpha.residual, max_width)
        return MeasureEnclosure(rest + alpha.half_turns, k)
    if isinstance(alpha, EnclosedAngle):
        return MeasureEnclosure(alpha.residual_halfturns + alpha.half_turns, k)
    raise TypeError(f"not an angle: {alpha!r}")


def theta_lower_chordsum(alpha, k: int, bits: int | None = None) -> RatInterval:
    """Length of the ``2**k``-piece inscribed broken line over a unit arc of ``alpha``.

    Each piece is the chord of ``alpha / 2**k``, i.e. ``2 sin(alpha / 2**(k+1))``;
    half-angles use ``cos(x/2) = sqrt((1 + cos x) / 2)`` and ``sin(x/2) = sin(x) / (2 cos(x/2))``.
    The lower endpoint is a certified lower bound for the measure in radians.
    """
    if k < 0:
        raise DomainError("k must be non-negative")
    if bits is None:
        bits = 2 * k + 64
    eps = Fraction(1, 1 << (bits + 4))
    c, s = cos_sin_enclosure(alpha, bits + 8)
    for _ in range(k + 1):
        c = sqrt_interval(((1 + c) / 2).clamp(_ZERO, _ONE), eps).round_out(bits + 8)
        s = (s / (2 * c)).round_out(bits + 8)
    return (s * (1 << (k + 1))).round_out(bits)


def arc_length(alpha, r_sq: SqLength, max_width: RatLike = Fraction(1, 10**9)) -> RatInterval:
    """Length of the circular arc cut out by ``alpha`` on a circle of squared radius ``r_sq``."""
    max_width = as_rat(max_width)
    if max_width <= 0:
        raise DomainError("max_width must be positive")

    def make(bits: int) -> RatInterval:
        eps = Fraction(1, 1 << bits)
        r = sqrt_enclosure(r_sq.value, eps)
        return theta(alpha, eps).radians() * r

    return _refine(make, max_width, bits_for_width(max_width) + 4)


def convert(m: MeasureEnclosure, unit: Unit | str) -> RatInterval:
    unit = Unit(unit)
    if unit is Unit.HALFTURN:
        return m.halfturns()
    if unit is Unit.DEGREE:
        return m.degrees()
    return m.radians()


def envelope_check(alpha, max_width: RatLike = Fraction(1, 2**20)) -> bool:
    """True iff the certified radian upper bound of the measure is below 4."""
    return theta(alpha, max_width).radians().hi < 4


def add_measured(g, h, max_width: RatLike = Fraction(1, 10**9)):
    """Sum involving measured or enclosed angles, with a certified half-turn carry."""
    max_width = as_rat(max_width)
    tg = theta(g, max_width / 2).halfturn_fraction
    th = theta(h, max_width / 2).halfturn_fraction
    total = tg + th
    if total.is_exact:
        q = total.lo
        if q.denominator == 1:
            return GeneralizedAngle(int(q))
        return MeasuredAngle(q)
    turns = total.lo.numerator // total.lo.denominator
    if total.hi >= turns + 1:
        raise PrecisionError(
            f"half-turn carry undecidable: sum {total} straddles {turns + 1}; refine max_width"
        )
    return EnclosedAngle(turns, total - turns)
