"""Run the randomized axiom suite on the rational plane and on a broken model.

The real model satisfies every exactly checkable axiom.  A model whose
betweenness test is inverted is caught at once, with a shrunk counterexample.
"""

from euclidkit.axioms import MUTANTS, format_report, run_axiom_suite

print(format_report(run_axiom_suite(seed=1, cases_per_axiom=500)))
print()
broken = run_axiom_suite(seed=1, cases_per_axiom=500, model=MUTANTS["betweenness-inverted"])
print(format_report([r for r in broken if r.failure_count]))
