from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkptri.algebra import ParameterError
from gkptri.core import GkpParams, triangle
from gkptri.derivation import (
    SECTAN_ROWS,
    Derivation,
    MonoElem,
    case_a_instance_check,
    exp_derivation_check,
    derivation_check,
    gkp_derivation,
    leibniz_check,
    operator_formula_check,
    sectan_identity_check,
    triangle_via_derivation,
)

from strategies import nonzero_rats, params, rats

r3 = rats(3, 3)
monos = st.builds(MonoElem.mono, r3, r3, nonzero_rats(3, 3))


def test_mono_arithmetic():
    x = MonoElem.mono(1, 0)
    y = MonoElem.mono(0, 1)
    assert (x + y) - y == x
    assert (x * y).terms == {(F(1), F(1)): F(1)}
    assert (x - x).is_zero()
    assert x * 3 == MonoElem.mono(1, 0, 3)


def test_power_rule():
    D = Derivation(MonoElem.mono(0, 0), MonoElem())  # d/dx
    assert D(MonoElem.mono(F(5, 2), 1)) == MonoElem.mono(F(3, 2), 1, F(5, 2))


@given(params(4, 3), monos, monos, monos)
def test_leibniz(p, a, b, c):
    assert leibniz_check(GkpParams.of(*p), a + b, c).passed
    assert leibniz_check(GkpParams.of(*p), a * b, b - c).passed


@given(params(4, 3))
def test_derivation_reproduces_recurrence(p):
    gp = GkpParams.of(*p)
    if gp.beta == 0 and gp.beta_p == 0:
        with pytest.raises(ParameterError):
            triangle_via_derivation(gp, 3)
        return
    assert derivation_check(gp, 6).passed


@given(params(4, 3))
def test_exponentiated_derivation(p):
    assert exp_derivation_check(GkpParams.of(*p), 5).passed


def test_eulerian_by_derivation():
    tri = triangle_via_derivation(GkpParams.of(0, 1, 1, 1, -1, 0), 4)
    assert list(tri.rows[4]) == [1, 11, 11, 1, 0]
    assert gkp_derivation(GkpParams.of(0, 1, 1, 1, -1, 0)).dx == MonoElem.mono(1, 1)


@pytest.mark.parametrize("kind", list(SECTAN_ROWS))
@pytest.mark.parametrize("c0,ci", [(1, 0), (2, 0), (0, 1), (F(1, 2), F(-2, 3))])
def test_sectan_identities(kind, c0, ci):
    assert sectan_identity_check(kind, c0, ci, 8).passed


@pytest.mark.parametrize("kind", ["AI", "AII", "AIII"])
@given(a=r3, b=nonzero_rats(3, 3), c=r3, d=r3)
def test_case_a_instances(kind, a, b, c, d):
    assert case_a_instance_check(kind, (a, b, c, d), 6).passed


@given(r3, nonzero_rats(3, 3), r3, r3, nonzero_rats(3, 3), r3)
def test_iterated_operator(a, b, g, ap, bp, gp):
    assert operator_formula_check(GkpParams.of(a, b, g, ap, bp, gp), 6).passed


def test_iterated_operator_needs_betas():
    with pytest.raises(ParameterError):
        operator_formula_check(GkpParams.of(0, 0, 1, 0, 1, 1), 3)


def test_only_one_beta_nonzero():
    # entries are separated through the y exponent alone
    p = GkpParams.of(1, 0, 2, F(1, 2), 3, 1)
    assert triangle_via_derivation(p, 5).rows == triangle(p, 5).rows
