import random
from fractions import Fraction as F

import pytest

from gkptri import characteristics as ch
from gkptri.algebra import ParameterError
from gkptri.core import GkpParams, Tableau
from gkptri.suites import egf_case_args


@pytest.mark.parametrize("case", ch.CASE_IDS)
def test_closed_egf_matches_recurrence(case):
    rng = random.Random(ch.CASE_IDS.index(case))
    for _ in range(3):
        c = ch.check_closed_egf(case, egf_case_args(case, rng), 7)
        assert c.passed, c.detail


def test_eulerian_closed_form_by_hand():
    # descents: G = (1-t)/(1 - t e^{z(1-t)})
    polys = ch.reduce_to_polys(ch.closed_egf("E_reducedspeck", (0, 1, 1), 5))
    assert [x * 24 for x in polys[4].coeffs(4)] == [1, 11, 11, 1]


def test_case_preconditions():
    with pytest.raises(ParameterError):
        ch.closed_egf("A1", (GkpParams.of(1, 1, 0, 1, 1, 0),), 4)
    with pytest.raises(ParameterError):
        ch.closed_egf("A3", (GkpParams.of(1, 1, 0, 1, 1, 0),), 4)
    with pytest.raises(ParameterError):
        ch.closed_egf("nope", (), 4)
    with pytest.raises(ParameterError):
        ch.closed_egf("B_S", (1, 2), 4)


def test_non_polynomial_coefficient_is_reported():
    c = ch.check_closed_egf("B_S", (2, 1, 0), 5)
    assert c.passed
    # a builder for the wrong triangle fails with a located message
    bad = ch.CASES["B_S"]
    orig = bad.params
    bad.params = lambda b, c0, ci: ch.narayana_e(b, c0, ci)
    try:
        assert not ch.check_closed_egf("B_S", (2, 1, 0), 5).passed
    finally:
        bad.params = orig


@pytest.mark.parametrize("kind", ["B", "C"])
@pytest.mark.parametrize("b,c0,ci", [(2, 1, 0), (3, F(1, 2), -1), (F(-1, 2), 2, F(1, 3))])
def test_lifting_coherence(kind, b, c0, ci):
    assert all(c.passed for c in ch.case38_coherence(kind, b, c0, ci, 6))


@pytest.mark.parametrize("a,b,r", [(0, 1, 0), (1, 2, F(1, 2)), (F(-1, 3), 2, -1)])
def test_vertical_slices(a, b, r):
    assert ch.vertical_builder_check(a, b, r, 7).passed
    for k in range(4):
        assert ch.vertical_egf_check(a, b, r, k, 7).passed


@pytest.mark.parametrize("c0,ci", [(1, 0), (F(1, 2), F(-3, 2)), (-2, 3)])
def test_narayana_contiguity(c0, ci):
    assert ch.narayana_contiguity(c0, ci, 8).passed


@pytest.mark.parametrize(
    "tab",
    [
        Tableau(F(1, 3), F(5, 12), F(1, 4), 1, F(-1, 2), F(-1, 2)),
        Tableau(F(3, 2), F(-1, 4), F(-1, 4), F(2, 3), 0, F(-2, 3)),
    ],
)
def test_implicit_solver(tab):
    assert ch.implicit_egf_check(tab, 6, 6).passed


def test_implicit_solver_rejects_bad_r0():
    with pytest.raises(ParameterError):
        ch.implicit_s_solver(Tableau(-1, 1, 1, 0, 0, 0), 4, 4)


def test_sin_squared_form():
    assert ch.sin2_check(6, 6).passed
