"""Exit criteria for the build, one test per criterion.

Each test appends a PASS/FAIL line that is printed in the pytest terminal
summary.  Reference values come from :mod:`oracles`, which is independent
of the package under test.
"""

import random
import time
from fractions import Fraction as F

import pytest

import oracles
from conftest import ACCEPTANCE_LINES
from euclidkit.angles import RIGHT, ProperAngle, add_general, angle_from_points
from euclidkit.axioms import MUTANTS, Status, run_axiom_suite
from euclidkit.cli import main
from euclidkit.measure import envelope_check, from_halfturn_fraction, pi_enclosure, sigma, theta, theta_lower_chordsum
from euclidkit.plane import Point
from strategies import circle_point

PI_LO, PI_HI = oracles.machin_pi_bounds()
W9 = F(1, 10**9)


@pytest.fixture
def criterion(request):
    name = request.node.name

    def report(ok: bool, detail: str):
        ACCEPTANCE_LINES.append(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        print(ACCEPTANCE_LINES[-1])
        assert ok, detail

    return report


def _encloses(r, lo, hi):
    return r.lo <= lo and hi <= r.hi


def _addable_pairs(n, seed):
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < n:
        a = ProperAngle.from_cos_sin(*circle_point(F(rng.randint(1, 30), rng.randint(1, 30))))
        b = ProperAngle.from_cos_sin(*circle_point(F(rng.randint(1, 30), rng.randint(1, 30))))
        total = add_general(a, b)
        if total.half_turns == 0:
            pairs.append((a, b, total.residual))
    return pairs


def test_1_archimedes_milestone(criterion, capsys):
    start = time.perf_counter()
    code = main(["--machine", "pi", "--doublings", "4"])
    elapsed = time.perf_counter() - start
    rec = dict(kv.split("=", 1) for kv in capsys.readouterr().out.splitlines()[-1].split())
    exact = pi_enclosure(4).bounds
    p20 = pi_enclosure(20).bounds
    ok = (
        code == 0
        and F(rec["lo"]) > 3 + F(10, 71)
        and F(rec["hi"]) < 3 + F(1, 7)
        and exact.lo > 3 + F(10, 71)
        and exact.hi < 3 + F(1, 7)
        and elapsed < 1
        and p20.width < F(1, 10**10)
        and _encloses(p20, PI_LO, PI_HI)
        and p20.lo <= F("3.14159265358979323846") <= p20.hi
    )
    criterion(ok, f"96-gon [{rec['lo']}, {rec['hi']}] in {elapsed:.3f}s; k=20 width {float(p20.width):.2e}")


def test_2_right_angle(criterion):
    m = theta(RIGHT, W9)
    rad = m.radians()
    ok = (
        m.halfturn_fraction.lo == m.halfturn_fraction.hi == F(1, 2)
        and m.degrees().lo == m.degrees().hi == 90
        and rad.width <= W9
        and _encloses(rad, PI_LO / 2, PI_HI / 2)
    )
    criterion(ok, f"halfturn {m.halfturn_fraction}, degree {m.degrees()}, radian width {float(rad.width):.2e}")


def test_3_degree(criterion):
    rad = theta(from_halfturn_fraction(F(1, 180)), W9).radians()
    ok = rad.width <= W9 and _encloses(rad, PI_LO / 180, PI_HI / 180)
    criterion(ok, f"radian width {float(rad.width):.2e}, contains pi/180")


def test_4_arctan_oracle_agreement(criterion):
    results = []
    for alpha, bounds in (
        (ProperAngle(F(9, 25), F(4, 5)), oracles.arctan_4_3_bounds()),
        (ProperAngle(F(16, 25), F(3, 5)), oracles.arctan_3_4_bounds()),
    ):
        rad = theta(alpha, W9 / 8).radians(W9)
        results.append(rad.width <= W9 and _encloses(rad, *bounds))
    criterion(all(results), f"atan(4/3), atan(3/4) contained: {results}")


def test_5_additivity(criterion):
    pairs = _addable_pairs(1000, seed=5)
    start = time.perf_counter()
    bad = 0
    for a, b, s in pairs:
        whole = theta(s, W9).halfturn_fraction
        parts = theta(a, W9).halfturn_fraction + theta(b, W9).halfturn_fraction
        bad += not whole.overlaps(parts)
    elapsed = time.perf_counter() - start
    criterion(bad == 0 and elapsed < 30, f"{len(pairs)} pairs, {bad} disjoint, {elapsed:.2f}s")


def test_6_sigma_subadditivity(criterion):
    w = F(1, 10**6)
    bad = 0
    pairs = _addable_pairs(1000, seed=5)
    for a, b, s in pairs:
        bad += not sigma(s, w).hi < (sigma(a, w) + sigma(b, w)).lo
    criterion(bad == 0, f"{len(pairs)} pairs at width 1e-6, {bad} not separated")


def test_7_envelope(criterion):
    rng = random.Random(7)
    angles = [ProperAngle(F(rng.randint(-9999, 9999), 10000)) for _ in range(800)]
    angles += [ProperAngle(F(-rng.randint(999001, 999999), 10**6)) for _ in range(200)]
    near = sum(a.inv < F(-999, 1000) for a in angles)
    bad = sum(not envelope_check(a) for a in angles)
    criterion(bad == 0 and near >= 200, f"{len(angles)} angles ({near} with inv < -0.999), {bad} above 4")


def test_8_chordsum_convergence(criterion):
    lows = [theta_lower_chordsum(RIGHT, k).lo for k in range(17)]
    upper = theta(RIGHT, W9).radians().hi
    increasing = all(x < y for x, y in zip(lows, lows[1:]))
    below = all(x < upper for x in lows)
    gap = PI_HI / 2 - lows[16]
    ok = increasing and below and gap <= F(1, 10**6)
    criterion(ok, f"increasing={increasing}, below theta={below}, pi/2 - lower(16) = {float(gap):.2e}")


def test_9_axiom_suite(criterion):
    start = time.perf_counter()
    reports = run_axiom_suite(seed=1, cases_per_axiom=10_000)
    elapsed = time.perf_counter() - start
    by_id = {r.axiom_id: r for r in reports}
    must_hold = ["I1", "I2", "I3", "B1", "B2", "B3", "B4", "C2", "C3", "C5", "C6", "SAS", "SSS", "A", "P"]
    holds = all(by_id[i].status is Status.HOLDS and by_id[i].cases_run == 10_000 for i in must_hold)
    documented = all(by_id[i].status is Status.NOT_CHECKABLE and by_id[i].reason for i in ("C1", "D"))
    zero = sum(r.failure_count for r in reports) == 0
    caught = {
        name: any(r.status is Status.FAILS for r in run_axiom_suite(seed=1, cases_per_axiom=200, model=m))
        for name, m in MUTANTS.items()
    }
    ok = holds and documented and zero and elapsed < 60 and all(caught.values())
    criterion(ok, f"holds={holds} C1/D documented={documented} zero failures={zero} in {elapsed:.1f}s; mutants caught={caught}")


def test_10_scale_placement_invariance(criterion):
    rng = random.Random(10)

    def rat(b=1000):
        return F(rng.randint(-b, b), rng.randint(1, b))

    mismatches = 0
    done = 0
    while done < 1000:
        a = Point(rat(), rat())
        b, c = Point(rat(), rat()), Point(rat(), rat())
        if len({a, b, c}) < 3 or (b - a).cross(c - a) == 0:
            continue
        base = angle_from_points(a, b, c)
        cs, sn = circle_point(F(rng.randint(-50, 50), rng.randint(1, 50)))
        t = Point(rat(), rat())
        k1 = F(rng.randint(1, 1000), rng.randint(1, 1000))
        k2 = F(rng.randint(1, 1000), rng.randint(1, 1000))

        def move(p):
            return Point(cs * p.x - sn * p.y + t.x, sn * p.x + cs * p.y + t.y)

        copy = angle_from_points(move(a), move(a + (b - a).scale(k1)), move(a + (c - a).scale(k2)))
        mismatches += copy.inv != base.inv
        done += 1
    criterion(mismatches == 0, f"{done} re-anchored angles, {mismatches} invariant mismatches")
