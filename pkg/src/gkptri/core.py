"""Triangles generated by the two-term recurrence

    <n+1, k+1> = (a n + b (k+1) + g) <n, k+1> + (a' n + b' k + g') <n, k>

with apex <0,0> = 1 and zero entries outside 0 <= k <= n, together with
their row polynomials, exponential generating functions, the symmetric
"tableau" coordinates, scaling/shift/trim operations and a check of the
first-order PDE satisfied by the generating function.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

from .algebra import POLY, ParameterError, Poly, Series, rat, rising
from .algebra.scalars import format_rat
from .report import Check


@dataclass(frozen=True)
class GkpParams:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    alpha_p: Fraction
    beta_p: Fraction
    gamma_p: Fraction

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma", "alpha_p", "beta_p", "gamma_p"):
            object.__setattr__(self, name, rat(getattr(self, name)))

    @classmethod
    def of(cls, *vals) -> "GkpParams":
        if len(vals) == 1 and not isinstance(vals[0], (int, Fraction, str)):
            vals = tuple(vals[0])
        if len(vals) != 6:
            raise ParameterError(f"need 6 parameters, got {len(vals)}")
        return cls(*(rat(v) for v in vals))

    def as_tuple(self) -> tuple[Fraction, ...]:
        return (self.alpha, self.beta, self.gamma, self.alpha_p, self.beta_p, self.gamma_p)

    def upper(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.alpha, self.beta, self.gamma)

    def lower(self) -> tuple[Fraction, Fraction, Fraction]:
        return (self.alpha_p, self.beta_p, self.gamma_p)

    def negated(self) -> "GkpParams":
        return GkpParams(*(-v for v in self.as_tuple()))

    def __str__(self):
        a, b, g, ap, bp, gp = (format_rat(v) for v in self.as_tuple())
        return f"[{a}, {b} | {g} ; {ap}, {bp} | {gp}]"


Row = tuple[Fraction, ...]


@dataclass(frozen=True)
class Triangle:
    """Rows 0..N of a triangle; row n has n+1 entries."""

    rows: tuple[Row, ...]
    params: GkpParams | None = None

    @property
    def depth(self) -> int:
        return len(self.rows) - 1

    def entry(self, n: int, k: int) -> Fraction:
        if n < 0 or k < 0 or k > n or n > self.depth:
            return Fraction(0)
        return self.rows[n][k]

    def row(self, n: int) -> Row:
        return self.rows[n]

    def map_rows(self, fn) -> "Triangle":
        return Triangle(tuple(tuple(fn(n, r)) for n, r in enumerate(self.rows)), None)

    def truncate(self, N: int) -> "Triangle":
        return Triangle(self.rows[: N + 1], self.params)

    def same_entries(self, other: "Triangle") -> bool:
        m = min(self.depth, other.depth)
        return self.rows[: m + 1] == other.rows[: m + 1]

    def first_difference(self, other: "Triangle") -> tuple[int, int] | None:
        m = min(self.depth, other.depth)
        for n in range(m + 1):
            for k in range(n + 1):
                if self.rows[n][k] != other.rows[n][k]:
                    return (n, k)
        return None


def triangle(params: GkpParams, N: int) -> Triangle:
    """Fill rows 0..N from the recurrence."""
    if N < 0:
        raise ParameterError("depth must be >= 0")
    a, b, g, ap, bp, gp = params.as_tuple()
    rows: list[Row] = [(Fraction(1),)]
    for n in range(N):
        prev = rows[-1]
        new = []
        for k1 in range(n + 2):
            # entry <n+1, k1>: left parent <n, k1>, diagonal parent <n, k1-1>
            v = Fraction(0)
            if k1 <= n:
                v += (a * n + b * k1 + g) * prev[k1]
            if k1 >= 1:
                v += (ap * n + bp * (k1 - 1) + gp) * prev[k1 - 1]
            new.append(v)
        rows.append(tuple(new))
    return Triangle(tuple(rows), params)


def triangle_from_rows(rows: Iterable[Sequence], params: GkpParams | None = None) -> Triangle:
    out = []
    for n, r in enumerate(rows):
        r = tuple(rat(x) for x in r)
        if len(r) != n + 1:
            raise ValueError(f"row {n} has {len(r)} entries, expected {n + 1}")
        out.append(r)
    return Triangle(tuple(out), params)


def row_polynomial(tri: Triangle, n: int) -> Poly:
    return Poly(tri.rows[n])


def row_polynomials(tri: Triangle) -> list[Poly]:
    return [Poly(r) for r in tri.rows]


def egf_truncated(tri: Triangle, order: int | None = None) -> Series:
    """``sum_n G_n(t) z^n / n!`` as a z-series with polynomial coefficients."""
    order = tri.depth + 1 if order is None else order
    if order > tri.depth + 1:
        raise ParameterError("triangle too shallow for requested order")
    cs = [Poly(tri.rows[n]) * Fraction(1, factorial(n)) for n in range(order)]
    return Series(cs, order, POLY)


def pde_coefficients(params: GkpParams) -> tuple[Poly, Poly, Poly]:
    """``(A, B, C)`` with ``[A z - 1] G_z + B G_t + C G = 0``."""
    a, b, g, ap, bp, gp = params.as_tuple()
    A = Poly([a, ap])
    B = Poly([0, b, bp])
    C = Poly([g, gp])
    return A, B, C


def verify_pde(params: GkpParams, N: int, tri: Triangle | None = None) -> Check:
    """Check the PDE coefficient by coefficient in z up to order N-1."""
    tri = triangle(params, N) if tri is None else tri
    A, B, C = pde_coefficients(params)
    g = [Poly(r) * Fraction(1, factorial(n)) for n, r in enumerate(tri.rows)]
    for n in range(len(g) - 1):
        resid = A * g[n] * n - g[n + 1] * (n + 1) + B * g[n].derivative() + C * g[n]
        if not resid.is_zero():
            return Check(f"pde {params}", False, f"first failing z-order {n}", data={"order": n})
    return Check(f"pde {params}", True, f"orders 0..{len(g) - 2}")


def verify_differential_recurrence(params: GkpParams, N: int, tri: Triangle | None = None) -> Check:
    """``G_{n+1} = (A n + C) G_n + B G_n'`` for n < N."""
    tri = triangle(params, N) if tri is None else tri
    A, B, C = pde_coefficients(params)
    G = row_polynomials(tri)
    for n in range(len(G) - 1):
        if G[n + 1] != (A * n + C) * G[n] + B * G[n].derivative():
            return Check(f"diff-rec {params}", False, f"row {n + 1}", data={"row": n + 1})
    return Check(f"diff-rec {params}", True)


# ---------------------------------------------------------------- tableau


POINTS = ("0", "1", "inf")


@dataclass(frozen=True)
class Tableau:
    """Symmetric coordinates: one (r, g) pair per point 0, 1, infinity.

    Always ``r0 + r1 + rinf = 1`` and ``g0 + g1 + ginf = 0``.
    """

    r0: Fraction
    r1: Fraction
    rinf: Fraction
    g0: Fraction
    g1: Fraction
    ginf: Fraction

    def __post_init__(self):
        for name in ("r0", "r1", "rinf", "g0", "g1", "ginf"):
            object.__setattr__(self, name, rat(getattr(self, name)))
        if self.r0 + self.r1 + self.rinf != 1 or self.g0 + self.g1 + self.ginf != 0:
            raise ParameterError("tableau must satisfy r-sum 1 and g-sum 0")

    @classmethod
    def from_pairs(cls, pairs: dict) -> "Tableau":
        (r0, g0), (r1, g1), (ri, gi) = pairs["0"], pairs["1"], pairs["inf"]
        return cls(r0, r1, ri, g0, g1, gi)

    def pairs(self) -> dict[str, tuple[Fraction, Fraction]]:
        return {"0": (self.r0, self.g0), "1": (self.r1, self.g1), "inf": (self.rinf, self.ginf)}


def to_tableau(params: GkpParams) -> Tableau:
    a, b, g, ap, bp, gp = params.as_tuple()
    if b == 0 or bp == 0:
        raise ParameterError("tableau coordinates need beta and beta' nonzero")
    return Tableau(-a / b, a / b - ap / bp, 1 + ap / bp, g / b, -g / b + gp / bp, -gp / bp)


def from_tableau(tab: Tableau, beta=1, beta_p=None) -> GkpParams:
    """Inverse of :func:`to_tableau`; ``beta_p`` defaults to ``-beta``."""
    beta = rat(beta)
    beta_p = -beta if beta_p is None else rat(beta_p)
    if beta == 0 or beta_p == 0:
        raise ParameterError("beta and beta' must be nonzero")
    return GkpParams(-beta * tab.r0, beta, beta * tab.g0, beta_p * (tab.rinf - 1), beta_p, -beta_p * tab.ginf)


def tableau_triangle(tab: Tableau, N: int) -> Triangle:
    """Entries in tableau normalization (beta = 1, beta' = -1)."""
    return triangle(from_tableau(tab, 1, -1), N)


def tableau_entry_factor(beta, beta_p, n: int, k: int) -> Fraction:
    """``<n,k>`` equals this factor times the tableau-normalized entry."""
    beta, beta_p = rat(beta), rat(beta_p)
    return beta ** (n - k) * (-beta_p) ** k


# ---------------------------------------------------------------- operations


def scale_params(params: GkpParams, A, B) -> GkpParams:
    """Upper triple times A, lower triple times B; entries gain A^{n-k} B^k."""
    A, B = rat(A), rat(B)
    a, b, g, ap, bp, gp = params.as_tuple()
    return GkpParams(A * a, A * b, A * g, B * ap, B * bp, B * gp)


def scaled_entries(tri: Triangle, A, B) -> Triangle:
    A, B = rat(A), rat(B)
    return tri.map_rows(lambda n, r: [A ** (n - k) * B**k * x for k, x in enumerate(r)])


def shift_lower(params: GkpParams, s) -> GkpParams:
    """From a triangle with lower triple (0, 0, g'), the one with
    lower triple (0, g', s g'); entries gain the rising factorial s^{k rising}."""
    s = rat(s)
    if params.alpha_p != 0 or params.beta_p != 0:
        raise ParameterError("lower shift needs alpha' = beta' = 0")
    gp = params.gamma_p
    return GkpParams(params.alpha, params.beta, params.gamma, 0, gp, s * gp)


def shifted_entries(tri: Triangle, s) -> Triangle:
    s = rat(s)
    return tri.map_rows(lambda n, r: [rising(s, k) * x for k, x in enumerate(r)])


def trim(params: GkpParams, side: str, N: int) -> tuple[GkpParams, Triangle]:
    """Strip a boundary from the depth-N triangle.

    ``left``  (g = 0, g' != 0): <n,k>* = <n+1,k+1>/g'.
    ``right`` (g' = 0, g != 0): <n,k>* = <n+1,k>/g.
    ``mid``   ((g, g') = A (b, b'), A != 0, b b' != 0): row polynomial
              G_{n+1} / (A (b + b' t)).
    Returns the predicted parameters and the depth N-1 trimmed triangle.
    """
    a, b, g, ap, bp, gp = params.as_tuple()
    tri = triangle(params, N)
    if side == "left":
        if g != 0 or gp == 0:
            raise ParameterError("left trim needs gamma = 0 and gamma' != 0")
        rows = [[tri.rows[n + 1][k + 1] / gp for k in range(n + 1)] for n in range(N)]
        new = GkpParams(a, b, a + b, ap, bp, ap + bp + gp)
    elif side == "right":
        if gp != 0 or g == 0:
            raise ParameterError("right trim needs gamma' = 0 and gamma != 0")
        rows = [[tri.rows[n + 1][k] / g for k in range(n + 1)] for n in range(N)]
        new = GkpParams(a, b, a + g, ap, bp, ap)
    elif side == "mid":
        if b == 0 or bp == 0:
            raise ParameterError("mid trim needs beta beta' != 0")
        A = g / b
        if A == 0 or gp != A * bp:
            raise ParameterError("mid trim needs (gamma, gamma') = A (beta, beta') with A != 0")
        div = Poly([A * b, A * bp])
        rows = []
        for n in range(N):
            q, r = Poly(tri.rows[n + 1]).divmod(div)
            if not r.is_zero():
                raise ArithmeticError(f"row {n + 1} not divisible by A (b + b' t)")
            rows.append(q.coeffs(n + 1))
        new = GkpParams(a, b, a + g, ap, bp, ap + bp + gp)
    else:
        raise ValueError(f"unknown trim side {side!r}")
    return new, triangle_from_rows(rows, new)
