"""Randomized checks of the plane axioms and angle theorems in the rational model.

Each axiom is a pair (generator, predicate).  The generator draws a flat
tuple of rationals from a seeded RNG; the predicate decodes that tuple into
points, rigid motions or angle classes and returns ``False`` only when the
axiom is violated.  Configurations for which the hypothesis of an axiom
fails count as passing, so shrinking a counterexample coordinate by
coordinate always stays meaningful.

The primitives under test are bundled in a :class:`Model` so that faulty
variants (mutants) can be swapped in to show that the harness detects them.
"""

from __future__ import annotations

import enum
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Callable, Sequence

from . import plane
from .angles import Angle, Location, ProperAngle, add_general, angle_from_points, inside, rotate_compose
from .exact import RatInterval
from .plane import Point, SqLength, line_intersection

Config = tuple[Fraction, ...]


class Status(str, enum.Enum):
    HOLDS = "holds"
    FAILS = "fails"
    NOT_CHECKABLE = "not-exactly-checkable"


class ContractError(ValueError):
    """A counterexample was requested for a configuration that does not fail."""


@dataclass(frozen=True)
class Model:
    betweenness: Callable = plane.betweenness
    side_of_line: Callable = plane.side_of_line
    sq_length: Callable = plane.sq_length
    angle_from_points: Callable = angle_from_points
    length_ratio: Callable = plane.length_ratio


RATIONAL_PLANE = Model()


@dataclass(frozen=True)
class AxiomReport:
    axiom_id: str
    status: Status
    cases_run: int
    failures: tuple[Config, ...] = ()
    failure_count: int = 0
    reason: str = ""

    def to_line(self) -> str:
        line = (
            f"axiom={self.axiom_id} status={self.status.value} "
            f"cases={self.cases_run} failures={self.failure_count}"
        )
        if self.failures:
            first = ",".join(str(v) for v in self.failures[0])
            line += f" counterexample={first}"
        if self.reason:
            line += f' reason="{self.reason}"'
        return line


# -- random data ---------------------------------------------------------------


@dataclass
class _Gen:
    rng: random.Random
    bound: int = 1000

    def rat(self) -> Fraction:
        return Fraction(self.rng.randint(-self.bound, self.bound), self.rng.randint(1, self.bound))

    def pos(self) -> Fraction:
        return Fraction(self.rng.randint(1, self.bound), self.rng.randint(1, self.bound))

    def unit(self) -> Fraction:
        """A rational strictly between 0 and 1."""
        d = self.rng.randint(2, self.bound)
        return Fraction(self.rng.randint(1, d - 1), d)

    def small(self) -> Fraction:
        return Fraction(self.rng.randint(-20, 20), self.rng.randint(1, 20))

    def coin(self) -> Fraction:
        return Fraction(self.rng.randint(0, 1))

    def point(self) -> tuple[Fraction, Fraction]:
        return self.rat(), self.rat()


def circle_point(m: Fraction) -> tuple[Fraction, Fraction]:
    """Rational unit-circle point ``((1 - m^2)/(1 + m^2), 2m/(1 + m^2))``."""
    d = 1 + m * m
    return (1 - m * m) / d, 2 * m / d


def _pt(cfg: Sequence[Fraction], i: int) -> Point:
    return Point(cfg[i], cfg[i + 1])


def _rigid(m: Fraction, tx: Fraction, ty: Fraction, flip: Fraction):
    """Rigid motion: optional reflection, rotation by the circle point of ``m``, translation."""
    c, s = circle_point(m)

    def move(p: Point) -> Point:
        x, y = p.x, (-p.y if flip else p.y)
        return Point(c * x - s * y + tx, s * x + c * y + ty)

    return move


def _rotate(v: Point, c: Fraction, s: Fraction) -> Point:
    return Point(c * v.x - s * v.y, s * v.x + c * v.y)


def _distinct(*pts: Point) -> bool:
    return len(set(pts)) == len(pts)


# -- axioms ----------------------------------------------------------------------


def _gen_i1(g: _Gen) -> Config:
    a, b = g.point(), g.point()
    t, u = g.rat(), g.rat()
    if g.rng.random() < 0.5:
        q = (a[0] + u * (b[0] - a[0]), a[1] + u * (b[1] - a[1]))
    else:
        q = g.point()
    return (*a, *b, t, *q)


def _check_i1(m: Model, cfg: Config) -> bool:
    a, b, t, q = _pt(cfg, 0), _pt(cfg, 2), cfg[4], _pt(cfg, 5)
    if a == b or t == 0:
        return True
    c = a + (b - a).scale(t)
    if m.side_of_line(a, (a, b)) != 0 or m.side_of_line(b, (a, b)) != 0:
        return False
    return (m.side_of_line(q, (a, b)) == 0) == (m.side_of_line(q, (a, c)) == 0)


def _gen_i2(g: _Gen) -> Config:
    return (*g.point(), *g.point(), g.rat())


def _check_i2(m: Model, cfg: Config) -> bool:
    a, b, t = _pt(cfg, 0), _pt(cfg, 2), cfg[4]
    if a == b:
        return True
    c = a + (b - a).scale(t)
    return all(m.side_of_line(p, (a, b)) == 0 for p in (a, b, c))


def _gen_i3(g: _Gen) -> Config:
    return (*g.point(), *g.point(), g.pos())


def _check_i3(m: Model, cfg: Config) -> bool:
    a, b, k = _pt(cfg, 0), _pt(cfg, 2), cfg[4]
    if a == b or k == 0:
        return True
    d = b - a
    off = a + Point(-d.y, d.x).scale(k)
    return m.side_of_line(off, (a, b)) != 0


def _gen_b1(g: _Gen) -> Config:
    t = g.unit() if g.rng.random() < 0.5 else g.small()
    e = Fraction(0) if g.rng.random() < 0.5 else g.small()
    return (*g.point(), *g.point(), t, e)


def _b1_points(cfg: Config):
    a, c, t, e = _pt(cfg, 0), _pt(cfg, 2), cfg[4], cfg[5]
    d = c - a
    b = a + d.scale(t) + Point(-d.y, d.x).scale(e)
    return a, b, c, t, e


def _check_b1(m: Model, cfg: Config) -> bool:
    a, b, c, t, e = _b1_points(cfg)
    expected = a != c and e == 0 and 0 < t < 1
    got = m.betweenness(a, b, c)
    if got != expected or got != m.betweenness(c, b, a):
        return False
    if got:
        return _distinct(a, b, c) and m.side_of_line(b, (a, c)) == 0
    return True


def _gen_b2(g: _Gen) -> Config:
    return (*g.point(), *g.point(), g.pos())


def _check_b2(m: Model, cfg: Config) -> bool:
    a, b, k = _pt(cfg, 0), _pt(cfg, 2), cfg[4]
    if a == b or k <= 0:
        return True
    beyond = b + (b - a).scale(k)
    return m.betweenness(a, b, beyond)


def _gen_b3(g: _Gen) -> Config:
    return (*g.point(), *g.point(), g.rat(), g.rat(), g.rat())


def _check_b3(m: Model, cfg: Config) -> bool:
    a, d = _pt(cfg, 0), _pt(cfg, 2)
    ts = cfg[4:7]
    if d == Point(0, 0) or len(set(ts)) < 3:
        return True
    p = [a + d.scale(t) for t in ts]
    count = sum(m.betweenness(p[(j + 1) % 3], p[j], p[(j + 2) % 3]) for j in range(3))
    return count == 1


def _gen_b4(g: _Gen) -> Config:
    return (*g.point(), *g.point(), *g.point(), g.unit(), *g.point())


def _check_b4(m: Model, cfg: Config) -> bool:
    a, b, c = _pt(cfg, 0), _pt(cfg, 2), _pt(cfg, 4)
    t, e = cfg[6], _pt(cfg, 7)
    if not 0 < t < 1 or plane.collinear(a, b, c):
        return True
    d = a + (b - a).scale(t)
    if d == e or any(plane.collinear(d, e, v) for v in (a, b, c)):
        return True
    for u, v in ((a, c), (b, c)):
        x = line_intersection(d, e, u, v)
        if x is not None and m.betweenness(u, x, v):
            return True
    return False


def _gen_c2(g: _Gen) -> Config:
    return (*g.point(), *g.point(), *(g.small() for _ in range(8)), *g.point(), *g.point())


def _check_c2(m: Model, cfg: Config) -> bool:
    a, b = _pt(cfg, 0), _pt(cfg, 2)
    if a == b:
        return True
    f1 = _rigid(cfg[4], cfg[5], cfg[6], cfg[7])
    f2 = _rigid(cfg[8], cfg[9], cfg[10], cfg[11])
    base = plane.Segment(a, b)
    one, two = plane.Segment(f1(a), f1(b)), plane.Segment(f2(a), f2(b))
    ab, cd, ef = m.sq_length(base), m.sq_length(one), m.sq_length(two)
    # rigid copies are congruent; congruence is then an equivalence
    if not (ab == cd and ab == ef and cd == ef and ab == ab):
        return False
    p, q = _pt(cfg, 12), _pt(cfg, 14)
    if p == q:
        return True
    other = m.sq_length(plane.Segment(p, q))
    return (other == ab) == (other == cd)


def _gen_c3(g: _Gen) -> Config:
    return (*g.point(), *g.point(), g.unit(), *(g.small() for _ in range(3)), g.coin())


def _check_c3(m: Model, cfg: Config) -> bool:
    a, c, t = _pt(cfg, 0), _pt(cfg, 2), cfg[4]
    if a == c or not 0 < t < 1:
        return True
    b = a + (c - a).scale(t)
    f = _rigid(cfg[5], cfg[6], cfg[7], cfg[8])
    a2, b2, c2 = f(a), f(b), f(c)
    S = lambda p, q: m.sq_length(plane.Segment(p, q))  # noqa: E731
    if not m.betweenness(a2, b2, c2):
        return False
    if S(a, b) != S(a2, b2) or S(b, c) != S(b2, c2):
        return False
    if S(a, c) != S(a2, c2):
        return False
    return S(a, c).value in plane.add_lengths(S(a, b), S(b, c), Fraction(1, 10**6))


def _circle_angle(mp: Fraction) -> tuple[Fraction, Fraction] | None:
    """Circle point with positive sine for parameter ``mp > 0``."""
    if mp <= 0:
        return None
    return circle_point(mp)


def _gen_c4(g: _Gen) -> Config:
    return (g.pos(), *g.point(), *g.point(), *g.point())


def _check_c4(m: Model, cfg: Config) -> bool:
    cs = _circle_angle(cfg[0])
    o, p, q = _pt(cfg, 1), _pt(cfg, 3), _pt(cfg, 5)
    if cs is None or o == p or m.side_of_line(q, (o, p)) == 0:
        return True
    c, s = cs
    target = ProperAngle.from_cos_sin(c, s)
    side = m.side_of_line(q, (o, p))
    x = o + _rotate(p - o, c, s * side)
    y = o + _rotate(p - o, c, -s * side)
    if m.angle_from_points(o, p, x) != target or m.side_of_line(x, (o, p)) != side:
        return False
    # the mirror construction is the unique copy on the other side
    return m.angle_from_points(o, p, y) == target and m.side_of_line(y, (o, p)) == -side


def _gen_motion_triangle(g: _Gen) -> Config:
    return (*g.point(), *g.point(), *g.point(), *(g.small() for _ in range(3)), g.coin())


def _triangles(cfg: Config):
    a, b, c = _pt(cfg, 0), _pt(cfg, 2), _pt(cfg, 4)
    f = _rigid(cfg[6], cfg[7], cfg[8], cfg[9])
    return (a, b, c), (f(a), f(b), f(c))


def _check_c5(m: Model, cfg: Config) -> bool:
    (a, b, c), (a2, b2, c2) = _triangles(cfg)
    if plane.collinear(a, b, c):
        return True
    f = _rigid(cfg[7], cfg[6], cfg[8], 1 - cfg[9])
    a3, b3, c3 = f(a), f(b), f(c)
    x = m.angle_from_points(a, b, c)
    y = m.angle_from_points(a2, b2, c2)
    z = m.angle_from_points(a3, b3, c3)
    return x == x and x == y and y == x and x == z and y == z


def _gen_c6(g: _Gen) -> Config:
    return (*g.point(), *g.point(), g.pos(), g.pos(), *(g.small() for _ in range(3)), g.coin())


def _check_c6(m: Model, cfg: Config) -> bool:
    a, b = _pt(cfg, 0), _pt(cfg, 2)
    p, q = _circle_angle(cfg[4]), _circle_angle(cfg[5])
    if a == b or p is None or q is None:
        return True
    total = rotate_compose(p, q)
    if total[1] <= 0:
        return True  # not addable
    v = b - a
    c = a + _rotate(v, *p)
    d = a + _rotate(v, *total)
    if inside(c, Angle.from_points(a, b, d)) is not Location.INSIDE:
        return False
    f = _rigid(cfg[6], cfg[7], cfg[8], cfg[9])
    e, f_, g_, h = f(a), f(b), f(c), f(d)
    bac, cad = m.angle_from_points(a, b, c), m.angle_from_points(a, c, d)
    if bac != m.angle_from_points(e, f_, g_) or cad != m.angle_from_points(e, g_, h):
        return False
    bad = m.angle_from_points(a, b, d)
    if bad != m.angle_from_points(e, f_, h):
        return False
    s = add_general(bac, cad)
    return s.half_turns == 0 and s.residual == bad


def _check_sas(m: Model, cfg: Config) -> bool:
    (a, b, c), (a2, b2, c2) = _triangles(cfg)
    if plane.collinear(a, b, c):
        return True
    S = lambda p, q: m.sq_length(plane.Segment(p, q))  # noqa: E731
    A = m.angle_from_points
    hyp = S(a, b) == S(a2, b2) and S(a, c) == S(a2, c2) and A(a, b, c) == A(a2, b2, c2)
    if not hyp:
        return False  # rigid copies always satisfy the hypothesis
    return S(b, c) == S(b2, c2) and A(b, a, c) == A(b2, a2, c2) and A(c, a, b) == A(c2, a2, b2)


def _check_sss(m: Model, cfg: Config) -> bool:
    (a, b, c), (a2, b2, c2) = _triangles(cfg)
    if plane.collinear(a, b, c):
        return True
    S = lambda p, q: m.sq_length(plane.Segment(p, q))  # noqa: E731
    A = m.angle_from_points
    if not (S(a, b) == S(a2, b2) and S(b, c) == S(b2, c2) and S(c, a) == S(c2, a2)):
        return False
    return A(a, b, c) == A(a2, b2, c2) and A(b, a, c) == A(b2, a2, c2) and A(c, a, b) == A(c2, a2, b2)


def _gen_a(g: _Gen) -> Config:
    return (g.pos(), g.pos())


def _check_a(m: Model, cfg: Config) -> bool:
    x, y = cfg
    if x <= 0 or y <= 0:
        return True
    r = m.length_ratio(SqLength(x), SqLength(y), Fraction(1, 1000))
    if not (isinstance(r, RatInterval) and 0 < r.lo and r.width <= Fraction(1, 1000)):
        return False
    if not (r.lo ** 2 * y <= x <= r.hi ** 2 * y):
        return False
    n = r.hi.numerator // r.hi.denominator + 1
    return n * n * y > x


def _gen_p(g: _Gen) -> Config:
    return (*g.point(), *g.point(), *g.point(), *g.point())


def _check_p(m: Model, cfg: Config) -> bool:
    a, b, p, d = _pt(cfg, 0), _pt(cfg, 2), _pt(cfg, 4), _pt(cfg, 6)
    if a == b or m.side_of_line(p, (a, b)) == 0 or d == Point(0, 0):
        return True
    par = p + (b - a)
    if line_intersection(a, b, p, par) is not None:
        return False
    if (b - a).cross(d) == 0:
        # another direction parallel to AB gives the same line through P
        return m.side_of_line(p + d, (p, par)) == 0
    x = line_intersection(a, b, p, p + d)
    return m.side_of_line(x, (a, b)) == 0 and m.side_of_line(x, (p, p + d)) == 0


@dataclass(frozen=True)
class Axiom:
    axiom_id: str
    generate: Callable | None
    check: Callable | None
    reason: str = ""


AXIOMS: tuple[Axiom, ...] = (
    Axiom("I1", _gen_i1, _check_i1),
    Axiom("I2", _gen_i2, _check_i2),
    Axiom("I3", _gen_i3, _check_i3),
    Axiom("B1", _gen_b1, _check_b1),
    Axiom("B2", _gen_b2, _check_b2),
    Axiom("B3", _gen_b3, _check_b3),
    Axiom("B4", _gen_b4, _check_b4),
    Axiom(
        "C1",
        None,
        None,
        "laying off a given length on a ray needs square roots of non-squares; Q^2 is not a real Euclidean plane",
    ),
    Axiom("C2", _gen_c2, _check_c2),
    Axiom("C3", _gen_c3, _check_c3),
    Axiom("C4", _gen_c4, _check_c4),
    Axiom("C5", _gen_motion_triangle, _check_c5),
    Axiom("C6", _gen_c6, _check_c6),
    Axiom("SAS", _gen_motion_triangle, _check_sas),
    Axiom("SSS", _gen_motion_triangle, _check_sss),
    Axiom("A", _gen_a, _check_a),
    Axiom(
        "D",
        None,
        None,
        "Dedekind completeness is second-order and fails in Q^2; only convergence of ratio enclosures is checked",
    ),
    Axiom("P", _gen_p, _check_p),
)

_BY_ID = {ax.axiom_id: ax for ax in AXIOMS}


def holds(axiom_id: str, config: Config, model: Model = RATIONAL_PLANE) -> bool:
    """Evaluate one axiom predicate; an exception from a primitive counts as a violation."""
    ax = _BY_ID[axiom_id]
    try:
        return bool(ax.check(model, tuple(config)))
    except (ArithmeticError, ValueError, TypeError):
        return False


def _complexity(v: Fraction) -> int:
    return abs(v.numerator) + v.denominator


def _candidates(v: Fraction):
    seen = set()
    outs = [Fraction(0), Fraction(1), Fraction(-1), Fraction(int(v)), Fraction(round(v))]
    outs += [v.limit_denominator(d) for d in (1, 2, 3, 5, 10)]
    outs += [v / 2, Fraction(v.numerator // 2 or v.numerator, v.denominator), Fraction(v.numerator, max(1, v.denominator // 2))]
    for c in outs:
        if c not in seen and _complexity(c) < _complexity(v):
            seen.add(c)
            yield c


def minimize_counterexample(axiom_id: str, config: Sequence[Fraction], model: Model = RATIONAL_PLANE) -> Config:
    """Greedily shrink numerators and denominators while the axiom still fails."""
    cfg = tuple(Fraction(v) for v in config)
    if holds(axiom_id, cfg, model):
        raise ContractError(f"configuration does not violate {axiom_id}")
    changed = True
    while changed:
        changed = False
        for i, v in enumerate(cfg):
            for cand in sorted(_candidates(v), key=_complexity):
                trial = cfg[:i] + (cand,) + cfg[i + 1 :]
                if not holds(axiom_id, trial, model):
                    cfg = trial
                    changed = True
                    break
    return cfg


def run_axiom(axiom_id: str, seed: int, cases: int, model: Model = RATIONAL_PLANE, keep: int = 3) -> AxiomReport:
    ax = _BY_ID[axiom_id]
    if ax.check is None:
        return AxiomReport(axiom_id, Status.NOT_CHECKABLE, 0, reason=ax.reason)
    g = _Gen(random.Random(f"{seed}/{axiom_id}"))
    failing = []
    count = 0
    for _ in range(cases):
        cfg = ax.generate(g)
        if not holds(axiom_id, cfg, model):
            count += 1
            if len(failing) < keep:
                failing.append(minimize_counterexample(axiom_id, cfg, model))
    status = Status.FAILS if count else Status.HOLDS
    return AxiomReport(axiom_id, status, cases, tuple(failing), count)


def _run_one(args):
    return run_axiom(*args)


def run_axiom_suite(
    seed: int = 1,
    cases_per_axiom: int = 10_000,
    model: Model = RATIONAL_PLANE,
    workers: int = 1,
    axioms: Sequence[str] | None = None,
) -> list[AxiomReport]:
    """Run every axiom check; the result depends only on ``seed`` and ``cases_per_axiom``."""
    if cases_per_axiom < 1:
        raise ValueError("cases_per_axiom must be at least 1")
    ids = [ax.axiom_id for ax in AXIOMS] if axioms is None else list(axioms)
    jobs = [(i, seed, cases_per_axiom, model) for i in ids]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_one, jobs))
    return [_run_one(j) for j in jobs]


def format_report(reports: Sequence[AxiomReport]) -> str:
    return "\n".join(r.to_line() for r in reports)


# -- fault injection -------------------------------------------------------------


def _inverted_betweenness(a, b, c):
    return not plane.betweenness(a, b, c)


def _side_zero_as_left(p, line):
    return plane.side_of_line(p, line) or 1


def _manhattan_sq_length(s):
    d = s.a - s.b
    return SqLength((abs(d.x) + abs(d.y)) ** 2)


def _unsigned_angle(a, b, c):
    return ProperAngle(abs(angle_from_points(a, b, c).inv))


def _squared_ratio(x, y, max_width):
    return RatInterval.point(x.value / y.value)


MUTANTS: dict[str, Model] = {
    "betweenness-inverted": replace(RATIONAL_PLANE, betweenness=_inverted_betweenness),
    "side-of-line-zero-as-left": replace(RATIONAL_PLANE, side_of_line=_side_zero_as_left),
    "sq-length-manhattan": replace(RATIONAL_PLANE, sq_length=_manhattan_sq_length),
    "angle-invariant-unsigned": replace(RATIONAL_PLANE, angle_from_points=_unsigned_angle),
    "length-ratio-unrooted": replace(RATIONAL_PLANE, length_ratio=_squared_ratio),
}
