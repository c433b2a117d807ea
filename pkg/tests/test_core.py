from fractions import Fraction as F
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkptri.algebra import ParameterError
from gkptri.core import (
    GkpParams,
    Tableau,
    egf_truncated,
    from_tableau,
    scale_params,
    scaled_entries,
    shift_lower,
    shifted_entries,
    tableau_entry_factor,
    tableau_triangle,
    to_tableau,
    triangle,
    triangle_from_rows,
    trim,
    verify_differential_recurrence,
    verify_pde,
)
from gkptri.families.named import stirling_params

from oracles import naive_triangle
from strategies import nonzero_rats, params, rats


def test_pascal():
    assert triangle(GkpParams.of(0, 0, 1, 0, 0, 1), 2).rows == ((1,), (1, 1), (1, 2, 1))
    tri = triangle(GkpParams.of(0, 0, 1, 0, 0, 1), 9)
    assert all(tri.entry(n, k) == comb(n, k) for n in range(10) for k in range(n + 1))


def test_entries_outside_are_zero():
    tri = triangle(GkpParams.of(1, 1, 1, 1, 1, 1), 3)
    assert tri.entry(3, 4) == 0 and tri.entry(-1, 0) == 0 and tri.entry(5, 0) == 0


@given(params())
def test_recurrence_matches_naive_recursion(p):
    assert [list(r) for r in triangle(GkpParams.of(*p), 7).rows] == naive_triangle(p, 7)


@given(params())
def test_pde_holds_for_any_parameters(p):
    gp = GkpParams.of(*p)
    assert verify_pde(gp, 9).passed
    assert verify_differential_recurrence(gp, 9).passed


def test_pde_detects_wrong_triangle():
    p = GkpParams.of(0, 1, 1, 1, -1, 0)
    wrong = triangle(GkpParams.of(0, 1, 1, 1, -1, 1), 6)
    c = verify_pde(p, 6, wrong)
    assert not c.passed and "z-order" in c.detail


def test_egf_coefficients():
    tri = triangle(GkpParams.of(0, 1, 1, 1, -1, 0), 4)
    s = egf_truncated(tri)
    assert s.coeff(4).coeffs(5) == [F(1, 24), F(11, 24), F(11, 24), F(1, 24), 0]
    with pytest.raises(ParameterError):
        egf_truncated(tri, 9)


def test_triangle_from_rows_validates_shape():
    with pytest.raises(ValueError):
        triangle_from_rows([[1], [1, 2, 3]])


@given(params(), nonzero_rats(), nonzero_rats())
def test_tableau_round_trip(p, beta, beta_p):
    a, _, g, ap, _, gp = p
    gk = GkpParams.of(a, beta, g, ap, beta_p, gp)
    tab = to_tableau(gk)
    assert tab.r0 + tab.r1 + tab.rinf == 1 and tab.g0 + tab.g1 + tab.ginf == 0
    assert from_tableau(tab, beta, beta_p) == gk
    # entries factor through the tableau-normalized triangle
    tri, ref = triangle(gk, 6), tableau_triangle(tab, 6)
    for n in range(7):
        for k in range(n + 1):
            assert tri.entry(n, k) == tableau_entry_factor(beta, beta_p, n, k) * ref.entry(n, k)


def test_tableau_rejects_bad_sums():
    with pytest.raises(ParameterError):
        Tableau(1, 1, 1, 0, 0, 0)


@given(params(), rats(), rats())
def test_scaling(p, A, B):
    gk = GkpParams.of(*p)
    assert triangle(scale_params(gk, A, B), 6).rows == scaled_entries(triangle(gk, 6), A, B).rows


@given(rats(), rats(), rats(), rats())
def test_lower_shift(a, b, g, s):
    base = GkpParams.of(a, b, g, 0, 0, F(3, 2))
    assert triangle(shift_lower(base, s), 6).rows == shifted_entries(triangle(base, 6), s).rows


@given(rats(), rats(), rats(), rats(), nonzero_rats())
def test_left_and_right_trim(a, b, ap, bp, c):
    new, trimmed = trim(GkpParams.of(a, b, 0, ap, bp, c), "left", 7)
    assert triangle(new, 6).rows == trimmed.rows
    new, trimmed = trim(GkpParams.of(a, b, c, ap, bp, 0), "right", 7)
    assert triangle(new, 6).rows == trimmed.rows


@given(rats(), nonzero_rats(), rats(), nonzero_rats(), nonzero_rats())
def test_mid_trim(a, b, ap, bp, A):
    new, trimmed = trim(GkpParams.of(a, b, A * b, ap, bp, A * bp), "mid", 6)
    assert triangle(new, 5).rows == trimmed.rows


def test_trim_preconditions():
    with pytest.raises(ParameterError):
        trim(GkpParams.of(0, 1, 1, 1, -1, 1), "left", 3)
    with pytest.raises(ParameterError):
        trim(GkpParams.of(0, 1, 1, 1, -1, 1), "right", 3)


@pytest.mark.parametrize("r", [0, 1, 2, 3])
def test_bessel_triangle_support(r):
    tri = triangle(stirling_params(1, 2, r), 10)
    for n in range(11):
        for k in range(n + 1):
            inside = 0 <= n - k <= (n + r) // 2
            assert (tri.entry(n, k) != 0) == inside, (n, k)


@given(st.integers(0, 5))
def test_depth_and_truncate(N):
    tri = triangle(GkpParams.of(1, 2, 3, 4, 5, 6), N)
    assert tri.depth == N and tri.truncate(0).rows == ((1,),)
