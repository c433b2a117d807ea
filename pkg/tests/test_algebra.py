from fractions import Fraction as F
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkptri.algebra import (
    QQ,
    ParameterError,
    Poly,
    RatFunc,
    Series,
    SingularTermError,
    binom,
    exp_series,
    falling,
    finite_difference,
    format_rat,
    gauss_2f1_series,
    hyp_term,
    parse_rat,
    parse_rat_list,
    rising,
)

from strategies import rats as _rats

rats = _rats()
polys = st.lists(rats, max_size=5).map(Poly)


@pytest.mark.parametrize("text,want", [("3", F(3)), ("-4/6", F(-2, 3)), (" 5 / -10 ", F(-1, 2)), ("+7", F(7))])
def test_parse_rat(text, want):
    assert parse_rat(text) == want


@pytest.mark.parametrize("bad", ["1.5", "", "1/0", "a", "1//2", "2e3"])
def test_parse_rat_rejects(bad):
    with pytest.raises(ValueError):
        parse_rat(bad)


def test_parse_list_reports_position():
    with pytest.raises(ValueError, match="item 2"):
        parse_rat_list("1,2,x,4")


@given(rats)
def test_format_parse_round_trip(q):
    s = format_rat(q)
    assert " " not in s and parse_rat(s) == q
    assert ("/" in s) == (q.denominator != 1)


@given(rats, st.integers(0, 6), rats)
def test_rising_falling_reflection(x, n, h):
    assert rising(x, n, h) == (-1) ** n * falling(-x, n, h)


def test_factorial_edge_cases():
    assert rising(5, 0) == 1 and falling(0, 0) == 1
    assert falling(4, 5) == 0
    assert rising(1, 6) == factorial(6)
    with pytest.raises(ParameterError):
        rising(1, -1)


@given(st.integers(-6, 10), st.integers(-2, 8))
def test_binom_matches_comb(n, k):
    if n >= 0 and k >= 0:
        assert binom(n, k) == comb(n, k)
    elif k < 0:
        assert binom(n, k) == 0
    else:
        assert binom(n, k) == (-1) ** k * comb(k - n - 1, k)


def test_finite_difference_of_cubes():
    vals = [x**3 for x in range(8)]
    assert finite_difference(vals, 3) == [6] * 5
    assert finite_difference(vals, 4) == [0] * 4


def test_hyp_term_conventions():
    # terminating upper parameter: later terms vanish
    assert hyp_term([-2, 3], [1], 3) == 0
    assert hyp_term([-2, 3], [1], 2) == F(-2 * -1 * 3 * 4, 2)
    with pytest.raises(SingularTermError):
        hyp_term([1], [-1], 3)
    # simultaneous zero is 0/0, reported as singular
    with pytest.raises(SingularTermError):
        hyp_term([-1], [-1], 2)


@given(polys, polys, polys)
def test_poly_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_poly_divmod(a, b):
    q, r = a.divmod(b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(polys, polys)
def test_poly_compose_evaluates(a, b):
    assert a.compose(b)(F(2, 3)) == a(b(F(2, 3)))


@given(polys.filter(lambda p: not p.is_zero()), polys.filter(lambda p: not p.is_zero()))
def test_ratfunc_cancels(a, b):
    f = RatFunc(a * b, b)
    assert f.is_poly() and f.to_poly() == a
    assert f * RatFunc(b) / RatFunc(b) == f


def test_series_exp_log_inverse():
    s = Series([0, 1, F(1, 2), F(-1, 3)], 8, QQ)
    assert s.exp().log() == s
    one_plus = s + 1
    assert one_plus * one_plus.inverse() == Series.const(1, 8, QQ)
    e = exp_series(8, 1, QQ)
    assert [e.coeff(n) for n in range(8)] == [F(1, factorial(n)) for n in range(8)]


@given(st.lists(rats, min_size=1, max_size=4), _rats(3, 4))
def test_series_power_law(tail, q):
    s = Series([1] + tail, 7, QQ)
    assert s.pow(q) * s.pow(1 - q) == s
    assert s.sqrt() * s.sqrt() == s


@given(rats, rats, rats.filter(lambda c: c.denominator > 1 or c > 0))
def test_gauss_2f1_coefficients(a, b, c):
    s = gauss_2f1_series(a, b, c, 6)
    for n in range(6):
        assert s.coeff(n) == rising(a, n) * rising(b, n) / (rising(c, n) * factorial(n))
