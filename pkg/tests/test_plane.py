from fractions import Fraction as F

import pytest
from hypothesis import given

import oracles
from euclidkit.exact import DomainError, PrecisionError, RatInterval
from euclidkit.plane import (
    Point,
    Ray,
    Segment,
    SqLength,
    add_lengths,
    betweenness,
    length_ratio,
    side_of_line,
    sq_length,
)
from strategies import points, positive_rationals

O = Point(0, 0)
X_AXIS = (Point(0, 0), Point(1, 0))


@pytest.mark.parametrize(
    "a, b, c, expected",
    [
        ((0, 0), (1, 0), (2, 0), True),
        ((0, 0), (2, 0), (1, 0), False),
        ((0, 0), (1, 1), (2, 0), False),
        ((0, 0), (0, 0), (2, 0), False),
    ],
)
def test_betweenness(a, b, c, expected):
    assert betweenness(Point(*a), Point(*b), Point(*c)) is expected


@pytest.mark.parametrize("p, expected", [((0, 1), 1), ((0, -1), -1), ((5, 0), 0)])
def test_side_of_line(p, expected):
    assert side_of_line(Point(*p), X_AXIS) == expected


def test_side_of_degenerate_line():
    with pytest.raises(DomainError):
        side_of_line(Point(1, 1), (O, O))


@pytest.mark.parametrize(
    "a, b, expected", [((0, 0), (3, 4), 25), ((0, 0), (1, 1), 2), ((1, 2), (1, 5), 9)]
)
def test_sq_length(a, b, expected):
    assert sq_length(Segment(Point(*a), Point(*b))).value == expected


def test_degenerate_primitives_rejected():
    with pytest.raises(DomainError):
        Segment(O, O)
    with pytest.raises(DomainError):
        Ray(O, O)
    with pytest.raises(DomainError):
        SqLength(0)


def test_length_ratio_examples():
    assert length_ratio(SqLength(4), SqLength(1), F(1, 10**6)) == RatInterval(2, 2)
    assert length_ratio(SqLength(7), SqLength(7), F(1, 10**6)) == RatInterval(1, 1)
    r = length_ratio(SqLength(2), SqLength(1), F(1, 10**6))
    lo, hi = oracles.sqrt_bounds(2)
    assert r.width <= F(1, 10**6)
    assert r.lo <= lo and hi <= r.hi


def test_length_ratio_is_certified_by_exact_comparison():
    r = length_ratio(SqLength(3), SqLength(5), F(1, 10**12))
    assert r.lo**2 * 5 <= 3 < r.hi**2 * 5


def test_length_ratio_large_partial_quotients():
    # sqrt(10**12 + 1) has a partial quotient near 2 * 10**6
    r = length_ratio(SqLength(10**12 + 1), SqLength(1), F(1, 10**20))
    assert r.width <= F(1, 10**20)


def test_length_ratio_cap(monkeypatch):
    monkeypatch.setenv("EUCLID_PRECISION_CAP", "3")
    with pytest.raises(PrecisionError):
        length_ratio(SqLength(2), SqLength(1), F(1, 10**30))


def test_add_lengths_examples():
    assert add_lengths(SqLength(1), SqLength(1), F(1, 10**6)) == RatInterval(4, 4)
    assert add_lengths(SqLength(4), SqLength(9), F(1, 10**6)) == RatInterval(25, 25)
    # sqrt2 + sqrt2 = 2 sqrt2, whose square is 8 exactly
    assert add_lengths(SqLength(2), SqLength(2), F(1, 10**6)) == RatInterval(8, 8)


W = F(1, 10**9)


@given(positive_rationals(), positive_rationals(), positive_rationals())
def test_ratio_distributes_over_length_sum(x, y, z):
    xs, ys, zs = SqLength(x), SqLength(y), SqLength(z)
    total = add_lengths(xs, ys, W)
    # ratio of the summed length: sqrt(total / z), enclosed from total's endpoints
    whole = RatInterval(
        length_ratio(SqLength(total.lo), zs, W).lo,
        length_ratio(SqLength(total.hi), zs, W).hi,
    )
    parts = length_ratio(xs, zs, W) + length_ratio(ys, zs, W)
    assert whole.overlaps(parts)


@given(positive_rationals(), positive_rationals(), positive_rationals())
def test_ratio_order_matches_length_order(x, y, z):
    if x == y:
        return
    lo_x, hi_y = (x, y) if x < y else (y, x)
    w = F(1, 2)
    while True:
        a = length_ratio(SqLength(lo_x), SqLength(z), w)
        b = length_ratio(SqLength(hi_y), SqLength(z), w)
        if a.hi < b.lo:
            break
        w /= 4


@given(positive_rationals(), positive_rationals())
def test_archimedes_ratio_terminates(x, y):
    r = length_ratio(SqLength(x), SqLength(y), F(1, 1000))
    assert 0 < r.lo <= r.hi
    n = int(r.hi) + 1
    assert n * n * y > x


@given(positive_rationals(), positive_rationals(), positive_rationals())
def test_add_lengths_commutative_associative(x, y, z):
    xs, ys, zs = SqLength(x), SqLength(y), SqLength(z)
    assert add_lengths(xs, ys, W) == add_lengths(ys, xs, W)
    xy, yz = add_lengths(xs, ys, W), add_lengths(ys, zs, W)
    left = RatInterval(add_lengths(SqLength(xy.lo), zs, W).lo, add_lengths(SqLength(xy.hi), zs, W).hi)
    right = RatInterval(add_lengths(xs, SqLength(yz.lo), W).lo, add_lengths(xs, SqLength(yz.hi), W).hi)
    assert left.overlaps(right)


@given(points(), points())
def test_exactly_one_between_for_collinear(a, d):
    if d == Point(0, 0):
        return
    pts = [a, a + d, a + d.scale(3)]
    assert sum(betweenness(pts[(j + 1) % 3], pts[j], pts[(j + 2) % 3]) for j in range(3)) == 1
