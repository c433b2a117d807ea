import random
from fractions import Fraction as F
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gkptri.algebra import ParameterError
from gkptri.core import GkpParams, triangle
from gkptri.families import closed_forms as cf
from gkptri.families import connection as cn
from gkptri.families import identities as ids
from gkptri.families import named, riordan
from gkptri.families.conjecture import conjecture_check, conjecture_lhs, conjecture_rhs
from gkptri.suites import registry_cases

from strategies import nonzero_rats, rats

r4 = rats(4, 3)
nz4 = nonzero_rats(4, 3)


# ----------------------------------------------------------- named families


@given(r4, nz4, r4)
def test_stirling_rank_one(a, b, r):
    tri = named.stirling(a, b, r, 8)
    assert all(tri.entry(n, k) == named.stirling_rank1(a, b, r, n, k) for n in range(9) for k in range(n + 1))


@given(r4, nz4, r4, r4)
def test_eulerian_rank_one(a, b, c0, ci):
    tri = named.eulerian(a, b, c0, ci, 8)
    assert all(tri.entry(n, k) == named.eulerian_rank1(a, b, c0, ci, n, k) for n in range(9) for k in range(n + 1))


def test_rank_one_needs_b():
    with pytest.raises(ParameterError):
        named.stirling_rank1(1, 0, 0, 3, 1)


def test_subset_numbers_by_inclusion_exclusion():
    tri = named.family_triangle("stirling-subset", (), 9)
    for n in range(10):
        for k in range(n + 1):
            want = sum((-1) ** (k - j) * comb(k, j) * j**n for j in range(k + 1)) // factorial(k)
            assert tri.entry(n, k) == want


def test_narayana_numbers():
    tri = triangle(named.narayana_e(2, 3, 3), 8)
    for n in range(9):
        row = cf.oeis_normalized_row("A001263", tri.rows[n], n)
        m = n + 1
        assert row == [F(comb(m, k) * comb(m, k + 1), m) for k in range(n + 1)]


def test_family_lookup_errors():
    with pytest.raises(ParameterError):
        named.family_params("nope", ())
    with pytest.raises(ParameterError):
        named.family_params("stirling", (1, 2))
    with pytest.raises(ParameterError):
        named.family_params("binomial", (1,))


# --------------------------------------------------------------- identities


@pytest.mark.parametrize("which", ["i", "ii", "iii", "iv", "v"])
@given(a=r4, b=nz4, r=r4)
def test_stirling_contiguity(which, a, b, r):
    assert ids.stirling_contiguity(which, a, b, r, 6).passed


@pytest.mark.parametrize("which", ["i", "ii", "iii", "iv", "v"])
@given(a=r4, b=nz4, c0=r4, ci=r4)
def test_eulerian_contiguity(which, a, b, c0, ci):
    assert ids.eulerian_contiguity(which, a, b, c0, ci, 6).passed


@given(r4, r4, r4, r4)
def test_reflection(a, b, c0, ci):
    assert ids.reflection_check(a, b, c0, ci, 7).passed


@given(r4, r4, r4, r4, nz4)
def test_homogeneity(a, b, c0, ci, lam):
    assert ids.homogeneity_check("S", (a, b, c0), lam, 6).passed
    assert ids.homogeneity_check("E", (a, b, c0, ci), lam, 6).passed


@given(r4, nz4, r4, r4)
def test_ubt_closure(a, b, r, d):
    assert ids.ubt_closure_check(a, b, r, d, 6).passed


@pytest.mark.parametrize("form", ["binomial", "stirling"])
@given(a=r4, b=nz4, c0=r4)
def test_single_progression(form, a, b, c0):
    assert ids.single_progression_check(a, b, c0, 6, form).passed


@pytest.mark.parametrize("kind,nargs", [("stirling", 3), ("worpitzky_general", 4), ("worpitzky_single", 3), ("symmetric_applicable", 2)])
@given(data=st.data())
def test_connection_identities(kind, nargs, data):
    args = [data.draw(r4) for _ in range(nargs)]
    bpos = 0 if kind == "symmetric_applicable" else 1
    args[bpos] = data.draw(nz4)
    assert all(c.passed for c in ids.connection_check(kind, args, 6))


@pytest.mark.parametrize("kind,nargs", [("ubt", 4), ("rephrased", 4), ("lbt", 3)])
@given(data=st.data())
def test_transform_pairs(kind, nargs, data):
    args = [data.draw(r4) for _ in range(nargs)]
    args[1] = data.draw(nz4)
    assert all(c.passed for c in ids.transform_pair_check(kind, args, 6))


def test_binomial_transforms_invert():
    u = [F(1), F(-2), F(3, 4), F(5)]
    assert ids.ubt_inverse(ids.ubt_forward(u)) == u
    assert ids.lbt_inverse(ids.lbt_forward(u)) == u
    assert ids.glbt_inverse(ids.glbt_forward(u, F(2, 3), 3), F(2, 3), 3) == u


@given(r4, r4, r4, r4, r4)
def test_denormalization(a, b, r, bp, gp):
    assert ids.denormalization_check(a, b, r, bp, gp, 6).passed


# ------------------------------------------------------------------ Riordan


@given(r4, nz4, r4, r4, r4)
def test_riordan_laws(a, b, c, r1, r2):
    assert all(ch.passed for ch in riordan.riordan_checks(a, b, c, r1, r2, 7))


def test_subset_and_cycle_matrices_are_inverse():
    N = 12
    prod = riordan.matmul(riordan.stirling_matrix(0, 1, 0, N), riordan.stirling_matrix(1, 0, 0, N))
    assert prod == riordan.identity(N)


# -------------------------------------------------------------- registry


@pytest.mark.parametrize("fid,variant,kw", registry_cases(random.Random(7)))
def test_registry_entry(fid, variant, kw):
    c = cf.cross_check(fid, variant, 10, **kw)
    if not c.passed and c.detail.startswith("0 entries"):
        pytest.skip("every entry singular at this parameter")
    assert c.passed, c.detail


@pytest.mark.parametrize("entry", list(cf.NARAYANA_T2))
def test_table_rows_cover_small_c(entry):
    # at least one representation evaluates somewhere for every c in 0..3
    for c in (0, 1, 2, 3, F(7, 3), F(-5, 2)):
        checks = [
            cf.cross_check("narayana_t2", v, 8, c=c)
            for v in cf.REGISTRY["narayana_t2"].variants
            if v.partition(":")[0] == entry
        ]
        assert all(ch.passed or ch.detail.startswith("0 entries") for ch in checks)


def test_unknown_formula_and_variant():
    with pytest.raises(ValueError):
        cf.closed_form_eval("nope", "i", 1, 0)
    with pytest.raises(ValueError):
        cf.closed_form_eval("S_00", "iv", 1, 0, r=0)


@pytest.mark.parametrize("r", [0, 1])
def test_bessel_duality(r):
    assert cf.curious_identity_check(r, 8).passed


# ---------------------------------------------------- connection matrices


@pytest.mark.parametrize("b", [2, 3, F(5, 2), F(1, 3)])
def test_connection_matrices(b):
    for n in range(6):
        assert all(c.passed for c in cn.connection_matrix_checks(n, b))
        assert cn.connection_matrix_eigencheck(n, b).passed
        assert cn.expansion_check(n, b, min(n, 2)).passed


def test_charpoly_small():
    p = cn.charpoly([[F(2), F(1)], [F(0), F(3)]])
    assert p.coeffs(3) == [6, -5, 1]


@pytest.mark.parametrize("c0", [1, 2, F(1, 2), F(-3, 4)])
def test_jacobi_forms(c0):
    assert all(c.passed for c in cn.jacobi_identity_check(c0, 7))


def test_jacobi_recurrence_and_boros_moll():
    assert cn.jacobi_recurrence_check(F(1, 2), F(-3, 2)).passed
    assert cn.boros_moll_check(8).passed
    # P_1(a) = a + 3/2
    assert cn.boros_moll(1).coeffs(2) == [F(3, 2), 1]


# ---------------------------------------------------------------- conjecture


def test_conjecture_scan_has_no_counterexample():
    for p in (0, 1, 2):
        for z in (0, 1):
            for c in (1, F(3, 2), 2):
                chk = conjecture_check(p, z, c, 6)
                assert chk.finding
                assert chk.passed, chk.detail


def test_conjecture_sides_agree_at_a_point():
    assert conjecture_lhs(1, 1, F(3, 2), 5, 2) == conjecture_rhs(1, 1, F(3, 2), 5, 2)
