from dataclasses import replace
from fractions import Fraction as F

import pytest

from euclidkit.axioms import (
    AXIOMS,
    MUTANTS,
    RATIONAL_PLANE,
    ContractError,
    Status,
    format_report,
    holds,
    minimize_counterexample,
    run_axiom,
    run_axiom_suite,
)


def test_suite_is_deterministic():
    a = run_axiom_suite(seed=7, cases_per_axiom=50)
    b = run_axiom_suite(seed=7, cases_per_axiom=50)
    assert a == b
    assert format_report(a) == format_report(b)


def test_parallel_schedule_gives_same_report():
    serial = run_axiom_suite(seed=3, cases_per_axiom=30)
    parallel = run_axiom_suite(seed=3, cases_per_axiom=30, workers=2)
    assert serial == parallel


def test_model_holds_on_small_run():
    for r in run_axiom_suite(seed=2, cases_per_axiom=200):
        if r.axiom_id in ("C1", "D"):
            assert r.status is Status.NOT_CHECKABLE and r.reason and r.cases_run == 0
        else:
            assert r.status is Status.HOLDS and r.failure_count == 0 and not r.failures


def test_betweenness_mutant_breaks_b3():
    r = run_axiom("B3", 1, 100, MUTANTS["betweenness-inverted"])
    assert r.status is Status.FAILS
    assert r.failures and all(not holds("B3", c, MUTANTS["betweenness-inverted"]) for c in r.failures)


@pytest.mark.parametrize("name", sorted(MUTANTS))
def test_every_mutant_is_detected(name):
    reports = run_axiom_suite(seed=1, cases_per_axiom=100, model=MUTANTS[name])
    assert any(r.status is Status.FAILS for r in reports)


def test_failures_nonempty_iff_fails():
    for model in (RATIONAL_PLANE, MUTANTS["sq-length-manhattan"]):
        for r in run_axiom_suite(seed=5, cases_per_axiom=40, model=model):
            assert bool(r.failures) == (r.status is Status.FAILS)


def _never_between(a, b, c):
    return False


def test_minimize_large_pasch_config():
    mutant = replace(RATIONAL_PLANE, betweenness=_never_between)
    cfg = tuple(F(v) for v in (917, -388, -604, 722, 481, 950)) + (F(377, 829),) + (F(-733, 3), F(401, 7))
    assert not holds("B4", cfg, mutant)
    small = minimize_counterexample("B4", cfg, mutant)
    assert not holds("B4", small, mutant)
    assert all(abs(v.numerator) < 10 and v.denominator < 10 for v in small)


def test_minimize_fixpoint():
    mutant = MUTANTS["betweenness-inverted"]
    cfg = minimize_counterexample("B2", (F(5), F(7), F(11), F(13), F(3, 2)), mutant)
    assert minimize_counterexample("B2", cfg, mutant) == cfg


def test_minimize_rejects_passing_config():
    with pytest.raises(ContractError):
        minimize_counterexample("B2", (F(0), F(0), F(1), F(0), F(1)))


def test_report_line_format():
    r = run_axiom("B3", 1, 10)
    assert r.to_line() == "axiom=B3 status=holds cases=10 failures=0"
    c1 = run_axiom("C1", 1, 10)
    assert c1.to_line().startswith("axiom=C1 status=not-exactly-checkable cases=0 failures=0 reason=")


def test_axiom_ids():
    ids = {a.axiom_id for a in AXIOMS}
    assert ids >= {"I1", "I2", "I3", "B1", "B2", "B3", "B4", "C1", "C2", "C3", "C5", "C6", "SAS", "SSS", "A", "D", "P"}
