import random

import pytest

from gkptri.characteristics import CASE_IDS
from gkptri.suites import SUITES, egf_case_args, rand_tableau, run_suite


@pytest.mark.parametrize("name", sorted(set(SUITES) - {"egf_all", "closed_forms"}))
def test_small_suite_runs_pass(name):
    checks = run_suite(name, N=5, samples=2, seed=3)
    assert checks
    bad = [c.line() for c in checks if not c.passed]
    assert not bad, bad[:3]


def test_seeded_runs_repeat():
    a = [c.line() for c in run_suite("contiguity", N=4, samples=2, seed=11)]
    b = [c.line() for c in run_suite("contiguity", N=4, samples=2, seed=11)]
    assert a == b


def test_every_egf_case_has_a_sampler():
    rng = random.Random(0)
    for case in CASE_IDS:
        egf_case_args(case, rng)


def test_random_tableaux_are_admissible():
    rng = random.Random(0)
    for _ in range(50):
        tab = rand_tableau(rng)
        assert not (tab.r0.denominator == 1 and tab.r0 <= 0)


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
