"""The reference computations agree with well-known decimal expansions."""

from fractions import Fraction

import oracles


def _contains(bounds, digits: str):
    lo, hi = bounds
    whole, frac = digits.split(".")
    x = Fraction(int(whole + frac), 10 ** len(frac))
    tail = Fraction(1, 10 ** len(frac))
    return lo <= x + tail and x <= hi


def test_machin_pi():
    lo, hi = oracles.machin_pi_bounds()
    assert hi - lo < Fraction(1, 10**50)
    assert _contains((lo, hi), "3.14159265358979323846")


def test_arctan_3_4_5_family():
    assert _contains(oracles.arctan_4_3_bounds(), "0.9272952180016")
    assert _contains(oracles.arctan_3_4_bounds(), "0.6435011087932")


def test_sqrt_digits():
    assert oracles.sqrt_digits(2, 10) == 14142135623
    assert oracles.sqrt_digits(16, 3) == 4000


def test_half_angle_chord():
    lo, hi = oracles.half_angle_chord_right(1)
    assert Fraction(153073, 100000) < lo and hi < Fraction(153074, 100000)
