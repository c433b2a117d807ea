"""Polynomial connection formulas, binomial transform pairs, contiguity
relations, reflection and homogeneity for the Hsu-Shiue and generalized
Eulerian families. Every routine returns :class:`Check` records."""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Callable, Sequence

from ..algebra import Poly, falling, rat, rising
from ..core import Triangle
from ..report import Check
from .named import eulerian, stirling


def poly_falling(shift, n: int, step=1, scale=1) -> Poly:
    """``(scale x + shift)^{n falling, step}`` as a polynomial in x."""
    shift, step, scale = rat(shift), rat(step), rat(scale)
    out = Poly([1])
    for i in range(n):
        out = out * Poly([shift - i * step, scale])
    return out


def poly_rising(shift, n: int, step=1, scale=1) -> Poly:
    return poly_falling(shift, n, -rat(step), scale)


@lru_cache(maxsize=4096)
def _S(a, b, r, N) -> Triangle:
    return stirling(a, b, r, N)


@lru_cache(maxsize=4096)
def _E(a, b, c0, cinf, N) -> Triangle:
    return eulerian(a, b, c0, cinf, N)


def S_entry(a, b, r, n, k) -> Fraction:
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    return _S(rat(a), rat(b), rat(r), max(n, 16)).entry(n, k)


def E_entry(a, b, c0, cinf, n, k) -> Fraction:
    if n < 0 or k < 0 or k > n:
        return Fraction(0)
    return _E(rat(a), rat(b), rat(c0), rat(cinf), max(n, 16)).entry(n, k)


# ------------------------------------------------------------ connections


def connection_check(kind: str, args: Sequence, N: int) -> list[Check]:
    """Expand both sides as polynomials in x for every n <= N."""
    args = [rat(x) for x in args]
    out = []
    for n in range(N + 1):
        if kind == "stirling":
            a, b, r = args
            lhs = poly_falling(0, n, a)
            rhs = sum((poly_falling(-r, k, b) * S_entry(a, b, r, n, k) for k in range(n + 1)), Poly())
        elif kind == "worpitzky_general":
            a, b, c0, ci = args
            lhs = poly_falling(0, n, a) * rising(c0 + ci, n, b)
            rhs = sum(
                (
                    poly_falling(-c0, k, b) * poly_rising(ci, n - k, b) * E_entry(a, b, c0, ci, n, k)
                    for k in range(n + 1)
                ),
                Poly(),
            )
        elif kind == "worpitzky_single":
            a, b, c0 = args
            lhs = poly_falling(0, n, a) * (b**n * factorial(n))
            rhs = sum(
                (poly_falling(-c0 + b * (n - k), n, b) * E_entry(a, b, c0, b - c0, n, k) for k in range(n + 1)),
                Poly(),
            )
            ci = b - c0
            rhs2 = sum(
                (poly_rising(ci - b * k, n, b) * E_entry(a, b, b - ci, ci, n, k) for k in range(n + 1)),
                Poly(),
            )
            same_basis = all(poly_falling(-c0 + b * (n - k), n, b) == poly_rising(ci - b * k, n, b) for k in range(n + 1))
            out.append(Check(f"{kind} reindexed bases n={n}", same_basis))
            out.append(Check(f"{kind} rising form n={n}", lhs == rhs2))
        elif kind == "symmetric_applicable":
            b, ci = args
            lhs = poly_falling(ci, n, 1, scale=b)
            rhs = sum(
                (poly_falling(k, n) * (E_entry(-1, b, b - ci, ci, n, k) / factorial(n)) for k in range(n + 1)),
                Poly(),
            )
        else:
            raise ValueError(f"unknown connection kind {kind!r}")
        ok = lhs == rhs
        out.append(Check(f"{kind} {','.join(map(str, args))} n={n}", ok, "" if ok else f"lhs {lhs} rhs {rhs}"))
    return out


# --------------------------------------------------------- transform pairs


def ubt_forward(u: Sequence) -> list[Fraction]:
    n = len(u)
    return [sum((-1) ** (j - k) * comb(j, k) * u[j] for j in range(k, n)) for k in range(n)]


def ubt_inverse(v: Sequence) -> list[Fraction]:
    n = len(v)
    return [sum(comb(j, k) * v[j] for j in range(k, n)) for k in range(n)]


def lbt_forward(u: Sequence) -> list[Fraction]:
    return [sum((-1) ** (k - j) * comb(k, j) * u[j] for j in range(k + 1)) for k in range(len(u))]


def lbt_inverse(v: Sequence) -> list[Fraction]:
    return [sum(comb(k, j) * v[j] for j in range(k + 1)) for k in range(len(v))]


def glbt_forward(u: Sequence, A, b) -> list[Fraction]:
    """``v_k = sum_j (-1)^{k-j} C(k,j) A^{k-j falling, b} u_j``."""
    return [sum((-1) ** (k - j) * comb(k, j) * falling(A, k - j, b) * u[j] for j in range(k + 1)) for k in range(len(u))]


def glbt_inverse(v: Sequence, A, b) -> list[Fraction]:
    return [sum(comb(k, j) * rising(A, k - j, b) * v[j] for j in range(k + 1)) for k in range(len(v))]


def transform_pair_check(kind: str, args: Sequence, N: int) -> list[Check]:
    args = [rat(x) for x in args]
    out = []
    for n in range(N + 1):
        if kind == "ubt":
            a, b, c0, ci = args
            u = [rising(c0 + ci, n - j, b) * S_entry(-a, b, ci, n, n - j) for j in range(n + 1)]
            e = [E_entry(a, b, c0, ci, n, k) for k in range(n + 1)]
            fwd, back = ubt_forward(u) == e, ubt_inverse(e) == u
        elif kind == "rephrased":
            a, b, c0, ci = args
            A = b * n + c0 + ci
            u = [rising(c0 + ci, j, b) * falling(b * j + c0, n, a) for j in range(n + 1)]
            e = [b**k * factorial(k) * E_entry(a, b, c0, ci, n, k) for k in range(n + 1)]
            fwd, back = glbt_forward(u, A, b) == e, glbt_inverse(e, A, b) == u
        elif kind == "lbt":
            a, b, r = args
            u = [falling(b * j + r, n, a) for j in range(n + 1)]
            s = [b**k * factorial(k) * S_entry(a, b, r, n, k) for k in range(n + 1)]
            fwd, back = lbt_forward(u) == s, lbt_inverse(s) == u
        else:
            raise ValueError(f"unknown transform pair {kind!r}")
        tag = ",".join(map(str, args))
        out.append(Check(f"{kind} forward {tag} n={n}", fwd))
        out.append(Check(f"{kind} inverse {tag} n={n}", back))
    return out


# --------------------------------------------------------------- contiguity


def _range_check(name: str, N: int, kmin: int, fn: Callable[[int, int], tuple]) -> Check:
    for n in range(N + 1):
        for k in range(kmin, n + 1):
            lhs, rhs = fn(n, k)
            if lhs != rhs:
                return Check(name, False, f"n={n} k={k}: {lhs} != {rhs}")
    return Check(name, True)


def stirling_contiguity(which: str, a, b, r, N: int) -> Check:
    a, b, r = rat(a), rat(b), rat(r)
    S = lambda A, B, R, n, k: S_entry(A, B, R, n, k)  # noqa: E731
    name = f"S contiguity ({which}) a={a} b={b} r={r}"
    if which == "i":
        return _range_check(name, N, 0, lambda n, k: (S(a, b, r + a, n, k), S(a, b, r, n, k) + a * n * S(a, b, r, n - 1, k)))
    if which == "ii":
        return _range_check(
            name, N, -1, lambda n, k: (S(a, b, r + b, n, k), S(a, b, r, n, k) + b * (k + 1) * S(a, b, r, n, k + 1))
        )
    if which == "iii":
        return _range_check(name, N, 0, lambda n, k: (S(-a, b, r, n, k), S(a, b, r + a * (n - 1), n, k)))
    if which == "iv":
        return _range_check(name, N, 0, lambda n, k: (S(a, -b, r, n, k), S(a, b, r - b * k, n, k)))
    if which == "v":
        return _range_check(name, N, -1, lambda n, k: (S(a, b, b - a, n, k), S(a, b, 0, n + 1, k + 1)))
    raise ValueError(f"unknown contiguity relation {which!r}")


def eulerian_contiguity(which: str, a, b, c0, ci, N: int) -> Check:
    a, b, c0, ci = rat(a), rat(b), rat(c0), rat(ci)
    E = lambda A, B, C0, CI, n, k: E_entry(A, B, C0, CI, n, k)  # noqa: E731
    name = f"E contiguity ({which}) a={a} b={b} c0={c0} cinf={ci}"
    if which == "i":
        return _range_check(
            name,
            N,
            0,
            lambda n, k: (
                E(a, b, c0 + a, ci - a, n, k),
                E(a, b, c0, ci, n, k) + a * n * (E(a, b, c0, ci, n - 1, k) - E(a, b, c0, ci, n - 1, k - 1)),
            ),
        )
    if which == "ii":
        return _range_check(
            name,
            N,
            -1,
            lambda n, k: (
                E(a, b, c0 + b, -c0, n, k),
                E(a, b, c0, b - c0, n, k + 1) + (-1) ** k * falling(c0, n, a) * comb(n + 1, k + 1),
            ),
        )
    if which == "iii":
        return _range_check(
            name, N, -1, lambda n, k: (ci * E(a, b, b - a, ci + a, n, k), E(a, b, 0, ci, n + 1, k + 1))
        )
    if which == "iv":
        return _range_check(name, N, 0, lambda n, k: (c0 * E(a, b, c0 - a, a + b, n, k), E(a, b, c0, 0, n + 1, k)))
    if which == "v":
        c = c0
        return _range_check(
            name,
            N,
            -1,
            lambda n, k: (
                c * (E(a, b, c - a, a - c, n, k + 1) - E(a, b, c - a, a - c, n, k)),
                E(a, b, c, -c, n + 1, k + 1),
            ),
        )
    raise ValueError(f"unknown contiguity relation {which!r}")


def ubt_closure_check(a, b, r, delta, N: int) -> Check:
    """``delta^{k falling,b} S_{n,k}(a,-b;r+delta) = sum_j C(j,k) delta^{j falling,b} S_{n,j}(a,b;r)``."""
    a, b, r, d = rat(a), rat(b), rat(r), rat(delta)
    return _range_check(
        f"UBT closure a={a} b={b} r={r} delta={d}",
        N,
        0,
        lambda n, k: (
            falling(d, k, b) * S_entry(a, -b, r + d, n, k),
            sum(comb(j, k) * falling(d, j, b) * S_entry(a, b, r, n, j) for j in range(k, n + 1)),
        ),
    )


def reflection_check(a, b, c0, ci, N: int) -> Check:
    a, b, c0, ci = rat(a), rat(b), rat(c0), rat(ci)
    return _range_check(
        f"E reflection {a},{b},{c0},{ci}", N, 0, lambda n, k: (E_entry(a, b, c0, ci, n, n - k), E_entry(-a, b, ci, c0, n, k))
    )


def homogeneity_check(family: str, args: Sequence, lam, N: int) -> Check:
    lam = rat(lam)
    args = [rat(x) for x in args]
    if family == "S":
        a, b, r = args
        return _range_check(
            f"S homogeneity lambda={lam}",
            N,
            0,
            lambda n, k: (S_entry(lam * a, lam * b, lam * r, n, k), lam ** (n - k) * S_entry(a, b, r, n, k)),
        )
    if family == "E":
        a, b, c0, ci = args
        return _range_check(
            f"E homogeneity lambda={lam}",
            N,
            0,
            lambda n, k: (E_entry(lam * a, lam * b, lam * c0, lam * ci, n, k), lam**n * E_entry(a, b, c0, ci, n, k)),
        )
    raise ValueError(family)


def single_progression_check(a, b, c0, N: int, form: str = "binomial") -> Check:
    """Two rank-one forms of ``E(a, b; c0, b - c0)``.

    ``binomial``: sum_j (-1)^{k-j} C(n+1, k-j) (b j + c0)^{n falling, a}.
    ``stirling``: sum_{j>=k} (-1)^{j-k} C(j,k) b^{n-j} (n-j)! S_{n,n-j}(-a, b; b-c0).
    """
    a, b, c0 = rat(a), rat(b), rat(c0)
    if form == "binomial":
        def rhs(n, k):
            return sum((-1) ** (k - j) * comb(n + 1, k - j) * falling(b * j + c0, n, a) for j in range(k + 1))
    elif form == "stirling":
        def rhs(n, k):
            return sum(
                (-1) ** (j - k) * comb(j, k) * b ** (n - j) * factorial(n - j) * S_entry(-a, b, b - c0, n, n - j)
                for j in range(k, n + 1)
            )
    else:
        raise ValueError(form)
    return _range_check(
        f"single progression ({form}) a={a} b={b} c0={c0}", N, 0, lambda n, k: (E_entry(a, b, c0, b - c0, n, k), rhs(n, k))
    )


def denormalization_check(a, b, r, bp, gp, N: int) -> Check:
    """``[-a, b | r; 0, b' | g'] = (g')^{k rising, b'} S_{n,k}(a, b; r)``."""
    from ..core import GkpParams, triangle

    a, b, r, bp, gp = (rat(x) for x in (a, b, r, bp, gp))
    T = triangle(GkpParams.of(-a, b, r, 0, bp, gp), N)
    return _range_check(
        f"denormalization b'={bp} g'={gp}", N, 0, lambda n, k: (T.entry(n, k), rising(gp, k, bp) * S_entry(a, b, r, n, k))
    )

