"""
Twin-width of sparse random graphs
==================================

Below n^(-4/3) a random graph is almost always a cograph, between n^(-4/3)
and n^(-7/6) its non-trivial parts are caterpillars, and up to c/n every
component has at most one cycle.
"""

from twinwidth.experiments import ExperimentConfig, label_fraction, run_experiment

n = 1000
for rule in ("n^-1.5", "n^-1.25", "n^-1.1", "0.5/n"):
    recs = run_experiment(ExperimentConfig("regimes", [n], rule, samples=50, seed=7))
    fr = {lab: label_fraction(recs, [lab], n) for lab in ("tww0", "tww1", "tww2", "other")}
    print(rule.ljust(8), "  ".join(f"{k}={v:.2f}" for k, v in fr.items()))
