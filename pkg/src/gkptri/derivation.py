"""Formal derivations on monomials ``x^p y^q`` with rational exponents.

With ``D x = x^{1+alpha} y^{alpha'}`` and ``D y = x^{alpha+beta} y^{1+alpha'+beta'}``,
``D^n(x^gamma y^gamma')`` spreads over the lattice points
``(gamma + alpha n + beta k, gamma' + alpha' n + beta' k)`` and the
coefficient at k is the triangle entry ``<n, k>``.
"""
from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Mapping

from .algebra import ParameterError, Poly, RatFunc, rat, rising
from .core import GkpParams, Triangle, triangle
from .report import Check

Exp = tuple[Fraction, Fraction]


class MonoElem:
    """Finite sum of ``c x^p y^q``; zero coefficients are never stored."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple, object] | None = None):
        out: dict[Exp, Fraction] = {}
        for (p, q), c in (terms or {}).items():
            c = rat(c)
            if c:
                key = (rat(p), rat(q))
                out[key] = out.get(key, Fraction(0)) + c
                if not out[key]:
                    del out[key]
        self.terms = out

    @classmethod
    def mono(cls, p, q, c=1) -> "MonoElem":
        return cls({(p, q): c})

    def __add__(self, other: "MonoElem") -> "MonoElem":
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, Fraction(0)) + c
        return MonoElem(out)

    def __neg__(self):
        return MonoElem({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, MonoElem):
            return MonoElem({k: c * rat(other) for k, c in self.terms.items()})
        out: dict[Exp, Fraction] = {}
        for (p1, q1), c1 in self.terms.items():
            for (p2, q2), c2 in other.terms.items():
                k = (p1 + p2, q1 + q2)
                out[k] = out.get(k, Fraction(0)) + c1 * c2
        return MonoElem(out)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, MonoElem) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*x^({p})*y^({q})" for (p, q), c in sorted(self.terms.items()))


class Derivation:
    """A derivation fixed by the images of x and y (Leibniz and power rules)."""

    def __init__(self, dx: MonoElem, dy: MonoElem):
        self.dx, self.dy = dx, dy

    def __call__(self, e: MonoElem) -> MonoElem:
        out = MonoElem()
        for (p, q), c in e.terms.items():
            if p:
                out = out + MonoElem.mono(p - 1, q, c * p) * self.dx
            if q:
                out = out + MonoElem.mono(p, q - 1, c * q) * self.dy
        return out

    def power(self, e: MonoElem, n: int) -> list[MonoElem]:
        """``[e, D e, ..., D^n e]``."""
        out = [e]
        for _ in range(n):
            out.append(self(out[-1]))
        return out


def gkp_derivation(params: GkpParams) -> Derivation:
    a, b, _, ap, bp, _ = params.as_tuple()
    return Derivation(MonoElem.mono(1 + a, ap), MonoElem.mono(a + b, 1 + ap + bp))


def mono_derive(e: MonoElem, params: GkpParams) -> MonoElem:
    return gkp_derivation(params)(e)


def _read_row(term: MonoElem, params: GkpParams, n: int) -> list[Fraction]:
    a, b, g, ap, bp, gp = params.as_tuple()
    row = [Fraction(0)] * (n + 1)
    for (p, q), c in term.terms.items():
        k = (p - g - a * n) / b if b else (q - gp - ap * n) / bp
        if k.denominator != 1 or not 0 <= k <= n:
            raise ArithmeticError(f"term x^{p} y^{q} is off the lattice at n={n}")
        k = int(k)
        if (p, q) != (g + a * n + b * k, gp + ap * n + bp * k):
            raise ArithmeticError(f"term x^{p} y^{q} is off the lattice at n={n}")
        row[k] = c
    return row


def triangle_via_derivation(params: GkpParams, N: int) -> Triangle:
    """Rows 0..N read off ``D^n(x^gamma y^gamma')``."""
    if params.beta == 0 and params.beta_p == 0:
        raise ParameterError("need (beta, beta') != (0, 0) to separate the entries of a row")
    seed = MonoElem.mono(params.gamma, params.gamma_p)
    powers = gkp_derivation(params).power(seed, N)
    return Triangle(tuple(tuple(_read_row(powers[n], params, n)) for n in range(N + 1)), params)


def derivation_check(params: GkpParams, N: int) -> Check:
    name = f"derivation {params}"
    try:
        via = triangle_via_derivation(params, N)
    except ArithmeticError as exc:
        return Check(name, False, str(exc))
    diff = via.first_difference(triangle(params, N))
    return Check(name, diff is None, "" if diff is None else f"first difference at {diff}")


def exp_derivation_check(params: GkpParams, N: int) -> Check:
    """``sum delta^n/n! D^n(m) = m G(x^b y^b', delta x^a y^a')``, coefficient by coefficient in delta."""
    a, b, g, ap, bp, gp = params.as_tuple()
    seed = MonoElem.mono(g, gp)
    powers = gkp_derivation(params).power(seed, N)
    tri = triangle(params, N)
    for n in range(N + 1):
        lhs = powers[n] * Fraction(1, factorial(n))
        rhs = MonoElem()
        for k in range(n + 1):
            rhs = rhs + MonoElem.mono(a * n + b * k, ap * n + bp * k, tri.entry(n, k))
        rhs = seed * rhs * Fraction(1, factorial(n))
        if lhs != rhs:
            return Check(f"exponentiated derivation {params}", False, f"delta^{n}")
    return Check(f"exponentiated derivation {params}", True, f"order {N}")


def leibniz_check(params: GkpParams, e1: MonoElem, e2: MonoElem) -> Check:
    D = gkp_derivation(params)
    return Check("Leibniz rule", D(e1 * e2) == D(e1) * e2 + e1 * D(e2))


# ----------------------------------------------------- named instances

SECTAN_ROWS = {
    # kind -> ((alpha, beta; alpha', beta'), realization of x, y)
    "penult_a": ((-1, 2, 2, -2), "x = tan w, y = sec w"),
    "penult_b": ((0, 2, 1, -2), "x = sec w, y = tan w"),
    "penult_c": ((-1, 2, 1, -2), "x = cosh w, y = sinh w"),
}


def sectan_identity_check(kind: str, c0, cinf, N: int) -> Check:
    """Coefficients of the iterated derivative equal the W^S, W^rS or W^E triangle."""
    from .families.named import sectan_e, sectan_rs, sectan_s

    if kind not in SECTAN_ROWS:
        raise ValueError(f"unknown identity {kind!r}")
    (a, b, ap, bp), _ = SECTAN_ROWS[kind]
    params = GkpParams.of(a, b, c0, ap, bp, cinf)
    family = {"penult_a": sectan_s, "penult_b": sectan_rs, "penult_c": sectan_e}[kind]
    ref = triangle(family(2, c0, cinf), N)
    via = triangle_via_derivation(params, N)
    return Check(f"{kind} c0={rat(c0)} cinf={rat(cinf)}", via.same_entries(ref), f"n<={N}")


def case_a_instance_check(kind: str, args, N: int) -> Check:
    """Case-A parameter rows: AI gives s^{k rising} S(a,b;r), AII its reflection,
    AIII the generalized Eulerian triangle."""
    from .families.identities import E_entry, S_entry

    args = [rat(x) for x in args]
    if kind == "AI":
        a, b, r, s = args
        params = GkpParams.of(-a, b, r, 0, 1, s)
        ref = lambda n, k: rising(s, k) * S_entry(a, b, r, n, k)  # noqa: E731
    elif kind == "AII":
        a, b, r, s = args
        params = GkpParams.of(1, -1, r, -a + b, -b, s)
        ref = lambda n, k: rising(r, n - k) * S_entry(a, b, s, n, n - k)  # noqa: E731
    elif kind == "AIII":
        a, b, c0, ci = args
        params = GkpParams.of(-a, b, c0, a + b, -b, ci)
        ref = lambda n, k: E_entry(a, b, c0, ci, n, k)  # noqa: E731
    else:
        raise ValueError(kind)
    via = triangle_via_derivation(params, N)
    name = f"{kind} instance ({', '.join(map(str, args))})"
    for n in range(N + 1):
        for k in range(n + 1):
            if via.entry(n, k) != ref(n, k):
                return Check(name, False, f"n={n} k={k}")
    return Check(name, True, f"n<={N}")


# ------------------------------------------- iterated-operator formula


def _eval_xy(e: MonoElem, y_of_t: Poly) -> RatFunc:
    """Substitute x = t and y = y_of_t; all exponents must be integers."""
    out = RatFunc(0)
    for (p, q), c in e.terms.items():
        if p.denominator != 1 or q.denominator != 1:
            raise ArithmeticError(f"non-integer exponent ({p}, {q}) after normalization")
        out = out + RatFunc(Poly.t()) ** int(p) * RatFunc(y_of_t) ** int(q) * c
    return out


def operator_formula_check(params: GkpParams, N: int) -> Check:
    """The row polynomials come from ``[t^{1+a} y^{1-a-a'} D_t]^n`` applied to
    ``t^g / y^{g+g'}`` with y = beta + beta' t, after normalization.

    Here a, a', g, g' are alpha/beta, -alpha'/beta', gamma/beta, -gamma'/beta'.
    """
    al, be, ga, alp, bep, gap = params.as_tuple()
    if be == 0 or bep == 0:
        raise ParameterError("needs beta beta' != 0")
    a, ap, g, gp = al / be, -alp / bep, ga / be, -gap / bep
    lead = MonoElem.mono(1 + a, 1 - a - ap)
    D = Derivation(lead, lead * bep)  # D_t x = 1, D_t y = beta'
    seed = MonoElem.mono(g, -g - gp)
    powers = D.power(seed, N)
    y = Poly([be, bep])
    tri = triangle(params, N)
    for n in range(N + 1):
        norm = MonoElem.mono(-a * n - g, (a + ap) * n + g + gp)
        try:
            got = _eval_xy(powers[n] * norm, y)
        except ArithmeticError as exc:
            return Check(f"iterated operator {params}", False, str(exc))
        if got != RatFunc(Poly(tri.rows[n])):
            return Check(f"iterated operator {params}", False, f"n={n}")
    return Check(f"iterated operator {params}", True, f"n<={N}")
