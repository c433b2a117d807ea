"""Exponential Riordan arrays and the matrix identities of the
Hsu-Shiue triangles ``S(a, b; r)``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from ..algebra import ParameterError, Series, exp_series, rat
from ..report import Check
from .identities import S_entry

Matrix = list[list[Fraction]]


@dataclass(frozen=True)
class RiordanSpec:
    """``[d, h]``: d of order 0 (d_0 != 0), h of order 1 (h_1 != 0)."""

    d: Series
    h: Series

    def __post_init__(self):
        if self.d.coeff(0) == 0:
            raise ParameterError("d must have nonzero constant term")
        if self.h.coeff(0) != 0 or self.h.coeff(1) == 0:
            raise ParameterError("h must have order exactly 1")

    @property
    def order(self) -> int:
        return min(self.d.order, self.h.order)


def riordan_matrix(spec: RiordanSpec, N: int) -> Matrix:
    """``[d,h]_{n,k} = n!/k! [z^n] d h^k`` for 0 <= k, n <= N."""
    if spec.order < N + 1:
        raise ParameterError("series too short for requested size")
    M = [[Fraction(0)] * (N + 1) for _ in range(N + 1)]
    col = spec.d.truncate(N + 1)
    h = spec.h.truncate(N + 1)
    for k in range(N + 1):
        for n in range(k, N + 1):
            M[n][k] = col.coeff(n) * Fraction(factorial(n), factorial(k))
        col = col * h
    return M


def series_reversion(h: Series) -> Series:
    """Compositional inverse of an order-1 series."""
    N = h.order
    h1 = h.coeff(1)
    if h.coeff(0) != 0 or h1 == 0:
        raise ParameterError("reversion needs an order-1 series")
    g = Series([0, 1 / h1], N)
    for m in range(2, N):
        err = h.compose(g)
        g = g - Series([0] * m + [err.coeff(m) / h1], N)
    return g


def riordan_product(x: RiordanSpec, y: RiordanSpec) -> RiordanSpec:
    """``[d1,h1][d2,h2] = [(d2 o h1) d1, h2 o h1]``."""
    return RiordanSpec(y.d.compose(x.h) * x.d, y.h.compose(x.h))


def riordan_inverse(x: RiordanSpec) -> RiordanSpec:
    hb = series_reversion(x.h)
    return RiordanSpec(x.d.compose(hb).inverse(), hb)


def _power_1pz(a: Fraction, e: Fraction, order: int) -> Series:
    """``(1 + a z)^(e / a)`` with the a = 0 limit ``exp(e z)``."""
    if a == 0:
        return exp_series(order, e)
    return Series([1, a], order).pow(e / a)


def _log_1pz(a: Fraction, order: int) -> Series:
    """``log(1 + a z) / a`` with the a = 0 limit ``z``."""
    if a == 0:
        return Series([0, 1], order)
    return Series([1, a], order).log() / a


def stirling_riordan(a, b, r, order: int) -> RiordanSpec:
    """``S(a,b;r) = [(1+az)^{r/a}, ((1+az)^{b/a} - 1)/b]`` with its limits."""
    a, b, r = rat(a), rat(b), rat(r)
    d = _power_1pz(a, r, order)
    if b == 0:
        h = _log_1pz(a, order)
    else:
        h = (_power_1pz(a, b, order) - 1) / b
    return RiordanSpec(d, h)


def stirling_matrix(a, b, r, N: int) -> Matrix:
    return [[S_entry(a, b, r, n, k) for k in range(N + 1)] for n in range(N + 1)]


def matmul(A: Matrix, B: Matrix) -> Matrix:
    n = len(A)
    return [[sum(A[i][j] * B[j][k] for j in range(n)) for k in range(n)] for i in range(n)]


def identity(N: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(N + 1)] for i in range(N + 1)]


def riordan_checks(a, b, c, r1, r2, N: int) -> list[Check]:
    """Product, inverse and identity laws plus the two convolutions."""
    a, b, c, r1, r2 = (rat(x) for x in (a, b, c, r1, r2))
    out = []
    order = N + 1
    spec = stirling_riordan(a, b, r1, order)
    out.append(Check(f"S({a},{b};{r1}) is [d,h]", riordan_matrix(spec, N) == stirling_matrix(a, b, r1, N)))
    prod = matmul(stirling_matrix(a, b, r1, N), stirling_matrix(b, c, r2, N))
    out.append(Check(f"S({a},{c};r1+r2) = S({a},{b};r1) S({b},{c};r2)", prod == stirling_matrix(a, c, r1 + r2, N)))
    spec_prod = riordan_product(spec, stirling_riordan(b, c, r2, order))
    out.append(Check("Riordan product law", riordan_matrix(spec_prod, N) == prod))
    out.append(
        Check(
            f"S({a},{b};{r1})^-1 = S({b},{a};{-r1})",
            matmul(stirling_matrix(a, b, r1, N), stirling_matrix(b, a, -r1, N)) == identity(N),
        )
    )
    if b != 0:
        inv = riordan_inverse(spec)
        out.append(Check("Riordan inverse law", riordan_matrix(inv, N) == stirling_matrix(b, a, -r1, N)))
    out.append(Check(f"S({a},{a};0) = I", stirling_matrix(a, a, 0, N) == identity(N)))
    out.append(convolution_check(a, b, r1, r2, N))
    out.append(asymmetric_convolution_check(a, b, r1, r2, N))
    return out


def convolution_check(a, b, r1, r2, N: int) -> Check:
    S = S_entry
    for n in range(N + 1):
        for k1 in range(n + 1):
            for k2 in range(n + 1 - k1):
                k = k1 + k2
                lhs = Fraction(factorial(k), factorial(k1) * factorial(k2)) * S(a, b, r1 + r2, n, k)
                rhs = sum(
                    Fraction(factorial(n), factorial(n1) * factorial(n - n1)) * S(a, b, r1, n1, k1) * S(a, b, r2, n - n1, k2)
                    for n1 in range(k1, n - k2 + 1)
                )
                if lhs != rhs:
                    return Check("convolution", False, f"n={n} k1={k1} k2={k2}")
    return Check("convolution", True)


def asymmetric_convolution_check(a, b, r1, r2, N: int) -> Check:
    S = S_entry
    for n in range(N + 1):
        for k in range(n + 1):
            for k2 in range(N + 1 - n):
                n1 = n + k2
                lhs = Fraction(factorial(n1), factorial(n) * factorial(k2)) * S(a, b, r1 + r2, n, k)
                rhs = Fraction(0)
                for n2 in range(k2, n1 - k + 1):
                    k1 = k + n2
                    rhs += Fraction(factorial(k1), factorial(k) * factorial(n2)) * S(a, b, r1, n1, k1) * S(b, a, r2, n2, k2)
                if lhs != rhs:
                    return Check("asymmetric convolution", False, f"n={n} k={k} k2={k2}")
    return Check("asymmetric convolution", True)
