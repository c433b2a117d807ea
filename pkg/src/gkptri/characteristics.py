"""Closed-form bivariate EGFs, the implicit 2F1 construction for a general
tableau, and their comparison with recurrence-built EGFs.

Closed forms are truncated z-series whose coefficients are rational
functions of t. A correct builder reduces every coefficient to the
polynomial ``G_n(t)/n!``; anything else is reported as a failure.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable

from .algebra import (
    QQ,
    RATFUNC,
    ParameterError,
    Poly,
    RatFunc,
    Series,
    SeriesRing,
    exp_series,
    gauss_2f1_series,
    rat,
)
from .core import GkpParams, Tableau, egf_truncated, from_tableau, triangle
from .families.named import (
    eulerian_params,
    narayana_e,
    narayana_rs,
    narayana_s,
    sectan_e,
    sectan_rs,
    sectan_s,
    stirling_params,
)
from .report import Check

F = Fraction
t_ = RatFunc(Poly.t())


def _rf(x) -> RatFunc:
    return RATFUNC.coerce(x)


def _ser(coeffs, order: int) -> Series:
    return Series(coeffs, order, RATFUNC)


def _lin(a, order: int) -> Series:
    """``1 + a z``."""
    return _ser([1, _rf(a)], order)


def _pow_lin(a, e, order: int) -> Series:
    """``(1 + a z)^(e/a)``, or ``exp(e z)`` when a is exactly 0.

    ``e/a`` must be a constant even when a and e depend on t.
    """
    a, e = _rf(a), _rf(e)
    if a.num.is_zero():
        return exp_series(order, e, RATFUNC)
    q = e / a
    if not q.is_poly() or not q.to_poly().is_const():
        raise ParameterError("exponent must be a constant")
    return _lin(a, order).pow(q.to_poly().coeff(0))


def _unit_pow(s: Series, q) -> Series:
    return s.pow(rat(q))


# -------------------------------------------------------------- case A


def _need(cond: bool, msg: str):
    if not cond:
        raise ParameterError(msg)


def egf_a1(p: GkpParams, order: int) -> Series:
    a, b, g, ap, bp, gp = p.as_tuple()
    _need(ap == 0 and a != 0 and b != 0 and bp != 0, "A1 needs alpha' = 0, alpha != 0, beta beta' != 0")
    inner = _unit_pow(_lin(-a, order), -b / a)
    brace = 1 + (1 - inner) * (t_ * (bp / b))
    return _unit_pow(_lin(-a, order), -g / a) * _unit_pow(brace, -gp / bp)


def egf_a1_limit(p: GkpParams, order: int) -> Series:
    a, b, g, ap, bp, gp = p.as_tuple()
    _need(ap == 0 and a == 0 and b != 0 and bp != 0, "A1 limit needs alpha = alpha' = 0, beta beta' != 0")
    brace = 1 + (1 - exp_series(order, _rf(b), RATFUNC)) * (t_ * (bp / b))
    return exp_series(order, _rf(g), RATFUNC) * _unit_pow(brace, -gp / bp)


def egf_a2(p: GkpParams, order: int) -> Series:
    a, b, g, ap, bp, gp = p.as_tuple()
    m = ap + bp
    _need(a == -b and m != 0 and b != 0 and bp != 0, "A2 needs alpha = -beta, alpha' + beta' != 0")
    base = _lin(-m * t_, order)
    brace = 1 + (1 - _unit_pow(base, bp / m)) * (t_.inverse() * (b / bp))
    return _unit_pow(base, -gp / m) * _unit_pow(brace, g / b)


def egf_a2_limit(p: GkpParams, order: int) -> Series:
    a, b, g, ap, bp, gp = p.as_tuple()
    _need(a == -b and ap == -bp and b != 0 and bp != 0, "A2 limit needs alpha = -beta, alpha' = -beta'")
    brace = 1 + (1 - exp_series(order, -bp * t_, RATFUNC)) * (t_.inverse() * (b / bp))
    return exp_series(order, gp * t_, RATFUNC) * _unit_pow(brace, g / b)


def _a3_parts(p: GkpParams):
    a, b, g, ap, bp, gp = p.as_tuple()
    _need(b != 0 and bp != 0 and a / b == ap / bp + 1, "A3 needs alpha/beta = alpha'/beta' + 1")
    lin = RatFunc(Poly([b, bp]))  # beta + beta' t
    return a, b, g, bp, gp, lin


def egf_a3(p: GkpParams, order: int) -> Series:
    a, b, g, bp, gp, lin = _a3_parts(p)
    _need(a != 0, "A3 needs alpha != 0; use the limit")
    q = _rf(b) / lin
    X = _lin(-a * lin / b, order)
    first = 1 - (1 - _unit_pow(X, b / a)) * q
    second = 1 - (1 - _unit_pow(X, -b / a)) * (t_ * bp / lin)
    return _unit_pow(first, -g / b) * _unit_pow(second, gp / bp)


def egf_a3_limit(p: GkpParams, order: int) -> Series:
    a, b, g, bp, gp, lin = _a3_parts(p)
    _need(a == 0, "A3 limit needs alpha = 0")
    q = _rf(b) / lin
    first = 1 - (1 - exp_series(order, -lin, RATFUNC)) * q
    second = 1 - (1 - exp_series(order, lin, RATFUNC)) * (t_ * bp / lin)
    return _unit_pow(first, -g / b) * _unit_pow(second, gp / bp)


# ------------------------------------------- Stirling and Eulerian forms


def egf_s_elem(a, b, r, order: int) -> Series:
    """k!-weighted EGF of S(a, b; r)."""
    a, b, r = rat(a), rat(b), rat(r)
    _need(b != 0, "needs b != 0")
    h = _pow_lin(a, b, order) - 1
    return _pow_lin(a, r, order) * (1 - h * (t_ / b)).inverse()


def egf_s_vertical(a, b, r, order: int) -> Series:
    """Plain EGF of S(a, b; r): d(z) exp(t h(z))."""
    a, b, r = rat(a), rat(b), rat(r)
    _need(b != 0, "needs b != 0")
    h = (_pow_lin(a, b, order) - 1) * (t_ / b)
    return _pow_lin(a, r, order) * h.exp()


def egf_e_speck(a, b, c0, cinf, order: int) -> Series:
    a, b, c0, cinf = rat(a), rat(b), rat(c0), rat(cinf)
    _need(a != 0 and b != 0, "needs a != 0 and b != 0; use E_speck2 for a = 0")
    X = _lin(a * (1 - t_), order)
    inv1t = (1 - t_).inverse()
    first = 1 - (1 - _unit_pow(X, -b / a)) * inv1t
    second = 1 + (1 - _unit_pow(X, b / a)) * (t_ * inv1t)
    return _unit_pow(first, -c0 / b) * _unit_pow(second, -cinf / b)


def egf_e_speck2(b, c0, cinf, order: int) -> Series:
    b, c0, cinf = rat(b), rat(c0), rat(cinf)
    _need(b != 0, "needs b != 0")
    inv1t = (1 - t_).inverse()
    first = 1 - (1 - exp_series(order, -b * (1 - t_), RATFUNC)) * inv1t
    second = 1 + (1 - exp_series(order, b * (1 - t_), RATFUNC)) * (t_ * inv1t)
    return _unit_pow(first, -c0 / b) * _unit_pow(second, -cinf / b)


def egf_e_reducedspeck(a, b, c0, order: int) -> Series:
    """EGF of E(a, b; c0, b - c0); the a = 0 branch uses exponentials."""
    a, b, c0 = rat(a), rat(b), rat(c0)
    _need(b != 0, "needs b != 0")
    scale = a * (1 - t_)
    num = _pow_lin(scale, c0 * (1 - t_), order) * (1 - t_)
    den = 1 - _pow_lin(scale, b * (1 - t_), order) * t_
    return num / den


# -------------------------------------------------------------- case B


def _b_quadratic(which: str, order: int):
    """``(S, s_plus, s_minus, t_plus, t_minus)`` for b = 2."""
    if which == "I":
        S = _ser([1, 2 * (2 * t_ - 1), 1], order).sqrt()
        lin = _ser([2 * t_ - 1, 1], order)
        half = lin / S * F(1, 2)
        tp, tm = t_, 1 - t_
    elif which == "II":
        S = _ser([1, 2 * (2 - t_), t_ * t_], order).sqrt()
        lin = _ser([2 - t_, t_ * t_], order)
        half = lin / S * (1 / (2 * t_))
        tp, tm = 1 / t_, (t_ - 1) / t_
    elif which == "III":
        S = _ser([1, -2 * (1 + t_), (1 - t_) * (1 - t_)], order).sqrt()
        lin = _ser([1 + t_, -(1 - t_) * (1 - t_)], order)
        half = lin / S * (1 / (2 * (t_ - 1)))
        tp, tm = F(1, 2) + (t_ + 1) / (2 * (t_ - 1)), F(1, 2) - (t_ + 1) / (2 * (t_ - 1))
    else:
        raise ValueError(which)
    return S, half + F(1, 2), F(1, 2) - half, tp, tm


_EXPONENTS = {
    # case -> (exponent of s+/t+, exponent of s-/t-) in terms of (c0, cinf)
    "I": lambda c0, ci: (c0 / 2, -(c0 + ci) / 2),
    "II": lambda c0, ci: (ci / 2, -(c0 + ci) / 2),
    "III": lambda c0, ci: (c0 / 2, ci / 2),
}


def _combine(sp, sm, tp, tm, e_plus, e_minus) -> Series:
    return _unit_pow(sp * (1 / _rf(tp)), e_plus) * _unit_pow(sm * (1 / _rf(tm)), e_minus)


def _rescaled(builder: Callable[[str, Fraction, Fraction, int], Series], which, b, c0, ci, order) -> Series:
    """Run a b = 2 builder for general b using homogeneity in (b, c0, cinf)."""
    b, c0, ci = rat(b), rat(c0), rat(ci)
    _need(b != 0, "needs b != 0")
    lam = b / 2
    out = builder(which, c0 / lam, ci / lam, order)
    return out if lam == 1 else out.subs_scale(_rf(lam))


def _egf_b2(which, c0, ci, order):
    _, sp, sm, tp, tm = _b_quadratic(which, order)
    return _combine(sp, sm, tp, tm, *_EXPONENTS[which](c0, ci))


def egf_b(which: str, b, c0, cinf, order: int) -> Series:
    return _rescaled(_egf_b2, which, b, c0, cinf, order)


def egf_b_restricted(which: str, sub: str, c, order: int) -> Series:
    """Single-parameter B formulas at b = 2; ``sub`` in a, b, c."""
    c = rat(c)
    S, _, _, _, _ = _b_quadratic(which, order)
    z = Series.z(order, RATFUNC)
    if sub == "a":
        return _unit_pow(S, -c)
    if which == "I":
        if sub == "b":
            return S.inverse() * _unit_pow((S + z + (2 * t_ - 1)) * (1 / (2 * t_)), c - 1)
        lin = (1 - 2 * t_) - z
        return _unit_pow((lin - S) / (lin + S) * ((t_ - 1) / t_), (c - 1) / 2)
    if which == "II":
        lin = (2 - t_) + z * (t_ * t_)
        if sub == "b":
            return S.inverse() * _unit_pow((lin + S * t_) * F(1, 2), c - 1)
        return _unit_pow((lin + S * t_) / (lin - S * t_) * (1 - t_), (c - 1) / 2)
    if which == "III":
        lin = (1 + t_) - z * ((1 - t_) * (1 - t_))
        if sub == "b":
            return S.inverse() * _unit_pow((lin - S * (1 - t_)) * (1 / (2 * t_)), c - 1)
        return _unit_pow((lin - S * (1 - t_)) / (lin + S * (1 - t_)) * (1 / t_), (c - 1) / 2)
    raise ValueError(which)


B_RESTRICTED_PARAMS = {
    ("I", "a"): lambda c: narayana_s(2, c, -2 * c),
    ("I", "b"): lambda c: narayana_s(2, c, -2),
    ("I", "c"): lambda c: narayana_s(2, c - 1, 0),
    ("II", "a"): lambda c: narayana_rs(2, -2 * c, c),
    ("II", "b"): lambda c: narayana_rs(2, -2, c),
    ("II", "c"): lambda c: narayana_rs(2, 0, c - 1),
    ("III", "a"): lambda c: narayana_e(2, c, c),
    ("III", "b"): lambda c: narayana_e(2, c, 2 - c),
    ("III", "c"): lambda c: narayana_e(2, c - 1, 1 - c),
}


# -------------------------------------------------------------- case C


def _trig_pair(u: RatFunc, order: int, sign: int = -1) -> tuple[Series, Series]:
    """``C = sum sign^k (z^2 u)^k/(2k)!`` and ``S~ = sum sign^k (z^2 u)^k/(2k+1)!``."""
    cs, ss = [_rf(0)] * order, [_rf(0)] * order
    p = _rf(1)
    for k in range((order + 1) // 2):
        if 2 * k < order:
            cs[2 * k] = p * F(1, factorial(2 * k))
            ss[2 * k] = p * F(1, factorial(2 * k + 1))
        p = p * u * sign
    return _ser(cs, order), _ser(ss, order)


def _c_parts(which: str, order: int):
    """``s_plus, s_minus, t_plus, t_minus`` at b = 2.

    With w = z sqrt(u), cos w = C and sin w = z sqrt(u) S~, so
    s+- = t+- C^2 + t-+ z^2 u S~^2 +- 2 rho z C S~ where
    rho = sqrt(t+ t-) sqrt(u) is rational in each subcase.
    """
    if which == "I":
        tp, tm = t_, 1 - t_
        u = tp * tm
        rho = tp * tm
    elif which == "II":
        tp, tm = 1 / t_, (t_ - 1) / t_
        u = tm / tp
        rho = tm
    elif which == "III":
        tp, tm = F(1, 2) + (t_ + 1) / (2 * (t_ - 1)), F(1, 2) - (t_ + 1) / (2 * (t_ - 1))
        u = tp / tm
        rho = tp
    else:
        raise ValueError(which)
    C, St = _trig_pair(u, order)
    z = Series.z(order, RATFUNC)
    C2 = C * C
    S2 = St * St * z * z * u
    cross = C * St * z * (2 * rho)
    return C2 * tp + S2 * tm + cross, C2 * tm + S2 * tp - cross, tp, tm


def _egf_c2(which, c0, ci, order):
    sp, sm, tp, tm = _c_parts(which, order)
    return _combine(sp, sm, tp, tm, *_EXPONENTS[which](c0, ci))


def egf_c(which: str, b, c0, cinf, order: int) -> Series:
    return _rescaled(_egf_c2, which, b, c0, cinf, order)


def egf_c_rs_prop(power: int, order: int) -> Series:
    """``[1/(cosh(zv^{1/2}) - sinh(zv^{1/2})/v^{1/2})]^power`` with v = 1 - t."""
    Ch, Sh = _trig_pair(1 - t_, order, sign=1)
    base = (Ch - Sh * Series.z(order, RATFUNC)).inverse()
    return base if power == 1 else base.pow(power)


# ------------------------------------------------------------ registry


@dataclass(frozen=True)
class ClosedEgfSpec:
    case: str
    args: tuple
    order: int = 8


@dataclass
class _Case:
    build: Callable[..., Series]
    params: Callable[..., GkpParams]
    argnames: tuple[str, ...]
    weight: Callable[[int], Fraction] | None = field(default=None)


def _gkp(*v):
    return GkpParams.of(*v)


CASES: dict[str, _Case] = {
    "A1": _Case(lambda p, o: egf_a1(p, o), lambda p: p, ("params",)),
    "A1_limit": _Case(lambda p, o: egf_a1_limit(p, o), lambda p: p, ("params",)),
    "A2": _Case(lambda p, o: egf_a2(p, o), lambda p: p, ("params",)),
    "A2_limit": _Case(lambda p, o: egf_a2_limit(p, o), lambda p: p, ("params",)),
    "A3": _Case(lambda p, o: egf_a3(p, o), lambda p: p, ("params",)),
    "A3_limit": _Case(lambda p, o: egf_a3_limit(p, o), lambda p: p, ("params",)),
    "S_elem": _Case(egf_s_elem, lambda a, b, r: _gkp(-rat(a), b, r, 0, 1, 1), ("a", "b", "r")),
    "S_vertical": _Case(egf_s_vertical, stirling_params, ("a", "b", "r")),
    "E_speck": _Case(egf_e_speck, eulerian_params, ("a", "b", "c0", "cinf")),
    "E_speck2": _Case(egf_e_speck2, lambda b, c0, ci: eulerian_params(0, b, c0, ci), ("b", "c0", "cinf")),
    "E_reducedspeck": _Case(
        egf_e_reducedspeck, lambda a, b, c0: eulerian_params(a, b, c0, rat(b) - rat(c0)), ("a", "b", "c0")
    ),
    "B_S": _Case(lambda b, c0, ci, o: egf_b("I", b, c0, ci, o), narayana_s, ("b", "c0", "cinf")),
    "B_rS": _Case(lambda b, c0, ci, o: egf_b("II", b, c0, ci, o), narayana_rs, ("b", "c0", "cinf")),
    "B_E": _Case(lambda b, c0, ci, o: egf_b("III", b, c0, ci, o), narayana_e, ("b", "c0", "cinf")),
    "C_S": _Case(lambda b, c0, ci, o: egf_c("I", b, c0, ci, o), sectan_s, ("b", "c0", "cinf")),
    "C_rS": _Case(lambda b, c0, ci, o: egf_c("II", b, c0, ci, o), sectan_rs, ("b", "c0", "cinf")),
    "C_E": _Case(lambda b, c0, ci, o: egf_c("III", b, c0, ci, o), sectan_e, ("b", "c0", "cinf")),
    "C_rS_prop": _Case(
        lambda power, o: egf_c_rs_prop(int(power), o), lambda power: sectan_rs(2, int(power), 0), ("power",)
    ),
}
for (_w, _s), _pf in B_RESTRICTED_PARAMS.items():
    CASES[f"B_{_w}{_s}"] = _Case(
        (lambda w, s: lambda c, o: egf_b_restricted(w, s, c, o))(_w, _s), _pf, ("c",)
    )

CASE_IDS = tuple(CASES)


def closed_egf(case: str, args, order: int = 8) -> Series:
    if case not in CASES:
        raise ParameterError(f"unknown EGF case {case!r}; choose from {', '.join(CASES)}")
    spec = CASES[case]
    if len(args) != len(spec.argnames):
        raise ParameterError(f"{case} takes arguments {','.join(spec.argnames)}")
    return spec.build(*args, order)


def closed_egf_params(case: str, args) -> GkpParams:
    return CASES[case].params(*args)


def reduce_to_polys(s: Series) -> list[Poly]:
    """Every coefficient must be a polynomial in t; otherwise a builder is wrong."""
    out = []
    for n, c in enumerate(s.c):
        if not c.is_poly():
            raise ArithmeticError(f"coefficient of z^{n} is not a polynomial: {c.num.to_str()} / {c.den.to_str()}")
        out.append(c.to_poly())
    return out


def check_closed_egf(case: str, args, order: int = 8) -> Check:
    name = f"{case}{tuple(str(rat(a)) if not isinstance(a, GkpParams) else str(a) for a in args)}"
    try:
        series = closed_egf(case, args, order)
        polys = reduce_to_polys(series)
    except ArithmeticError as exc:
        return Check(name, False, str(exc))
    want = egf_truncated(triangle(closed_egf_params(case, args), order - 1), order)
    for n in range(order):
        if polys[n] != want.coeff(n):
            return Check(name, False, f"z^{n}: closed {polys[n].to_str()} recurrence {want.coeff(n).to_str()}")
    return Check(name, True, f"order {order}")


# ------------------------------------------------------- substitutions


def lift_series(s: Series, R: RatFunc, S: RatFunc) -> Series:
    """``G(R(t), S(t) z)`` for a series with rational-function coefficients."""
    out, p = [], _rf(1)
    for c in s.c:
        out.append(c.compose(R) * p)
        p = p * S
    return _ser(out, s.order)


def case38_coherence(kind: str, b, c0, cinf, order: int = 8) -> list[Check]:
    """The case-I builder, lifted by RT and by RT.UBT.RT, is the case-II / III builder."""
    from .transforms import S3Elem, transform_params

    build = egf_b if kind == "B" else egf_c
    fam = narayana_s if kind == "B" else sectan_s
    base = build("I", b, c0, cinf, order)
    out = []
    for name, which in (("rt", "II"), ("rur", "III")):
        e = S3Elem(name)
        newp = transform_params(e, fam(b, c0, cinf))
        lifted = lift_series(base, e.R.as_ratfunc(), e.S)
        other = build(which, b, newp.gamma, newp.gamma_p, order)
        out.append(Check(f"{kind} case I lifted by {name} is case {which}", lifted == other))
    return out


def vertical_egf_check(a, b, r, k: int, N: int) -> Check:
    """``sum_n S_{n,k} k!/n! z^n = d h^k`` with the Riordan pair of S(a, b; r)."""
    from .families.riordan import stirling_riordan

    spec = stirling_riordan(a, b, r, N)
    rhs = spec.d * spec.h.pow(k) if k else spec.d
    tri = triangle(stirling_params(a, b, r), N - 1)
    lhs = Series([tri.entry(n, k) * F(factorial(k), factorial(n)) for n in range(N)], N, QQ)
    return Check(f"vertical EGF k={k} ({rat(a)},{rat(b)};{rat(r)})", lhs == rhs)


def vertical_builder_check(a, b, r, order: int = 8) -> Check:
    """The t^k slice of the plain bivariate builder is d h^k / k!."""
    from .families.riordan import stirling_riordan

    polys = reduce_to_polys(egf_s_vertical(a, b, r, order))
    spec = stirling_riordan(a, b, r, order)
    for k in range(order):
        col = spec.d * spec.h.pow(k) if k else spec.d
        for n in range(order):
            if polys[n].coeff(k) != col.coeff(n) / factorial(k):
                return Check("vertical builder vs Riordan pair", False, f"n={n} k={k}")
    return Check("vertical builder vs Riordan pair", True)


# ----------------------------------------------------- Narayana relation


def narayana_contiguity(c0, cinf, N: int) -> Check:
    """``(2t-1) G_n + n G_{n-1} = 2t G_n(c0+1, cinf) - G_n(c0-1, cinf+2)`` for N^S(2; ., .)."""
    c0, cinf = rat(c0), rat(cinf)
    base = triangle(narayana_s(2, c0, cinf), N)
    up = triangle(narayana_s(2, c0 + 1, cinf), N)
    down = triangle(narayana_s(2, c0 - 1, cinf + 2), N)
    t = Poly.t()
    for n in range(1, N + 1):
        lhs = Poly([-1, 2]) * Poly(base.rows[n]) + Poly(base.rows[n - 1]) * n
        rhs = t * Poly(up.rows[n]) * 2 - Poly(down.rows[n])
        if lhs != rhs:
            return Check(f"Narayana contiguity ({c0},{cinf})", False, f"n={n}")
    return Check(f"Narayana contiguity ({c0},{cinf})", True, f"n<={N}")


# ------------------------------------------------------- implicit solver


def _bi_const(x, ring: SeriesRing, order_z: int) -> Series:
    return Series([x], order_z, ring)


def _horner_t(coeffs: list, x: Series, ring: SeriesRing, order_z: int) -> Series:
    """``sum_j coeffs[j] x^j`` for a (t, z) series x of positive t-order."""
    acc = _bi_const(ring.zero, ring, order_z)
    for a in reversed(coeffs):
        acc = acc * x + _bi_const(Series.const(a, ring.order, QQ), ring, order_z)
    return acc


def implicit_s_solver(tab: Tableau, order_t: int = 8, order_z: int = 8) -> tuple[Series, Series]:
    """Solve for ``s(t, z)`` and return ``(s, G)`` as z-series of t-series.

    ``u = s/t`` is the unique series with u = 1 + O(z) and
    ``u^r0 w^r1 F(t u) = r0 z + F(t)``, where ``w = (1-s)/(1-t)`` and
    F = 2F1(r0+r1, 1; 1+r0). A chord iteration with the z = 0 Jacobian
    gains one z-order per step.
    """
    r0, r1, g0, g1 = tab.r0, tab.r1, tab.g0, tab.g1
    if r0.denominator == 1 and r0 <= 0:
        raise ParameterError("r0 must not be a non-positive integer; permute the tableau first")
    ring = SeriesRing(order_t, QQ)
    Fser = gauss_2f1_series(r0 + r1, 1, 1 + r0, order_t)
    f = Fser.c
    T = Series([0, 1], order_t, QQ)
    one_minus_t_inv = Series([1, -1], order_t, QQ).inverse()
    tbar = T * one_minus_t_inv  # t/(1-t)
    Ft = Fser
    dF = Series(Fser.derivative().c + [F(0)], order_t, QQ)
    L = Ft * r0 - tbar * Ft * r1 + T * dF
    Linv = L.inverse()
    z = Series([ring.zero, ring.one], order_z, ring)
    rhs = z * r0 + _bi_const(Ft, ring, order_z)
    Tz = _bi_const(T, ring, order_z)
    u = _bi_const(ring.one, ring, order_z)
    for _ in range(order_z + 1):
        w = 1 + (1 - u) * Tz * _bi_const(one_minus_t_inv, ring, order_z)
        phi = u.pow(r0) * w.pow(r1) * _horner_t(f, u * Tz, ring, order_z) - rhs
        if phi.is_zero():
            break
        u = u - phi.scale(Linv)
    else:
        raise ArithmeticError("implicit solver did not converge")
    w = 1 + (1 - u) * Tz * _bi_const(one_minus_t_inv, ring, order_z)
    G = u.pow(g0) * w.pow(g1)
    return u * Tz, G


def implicit_egf_check(tab: Tableau, order_t: int = 8, order_z: int = 8) -> Check:
    _, G = implicit_s_solver(tab, order_t, order_z)
    tri = triangle(from_tableau(tab, 1, -1), order_z - 1)
    for n in range(order_z):
        row = Poly(tri.rows[n]) * F(1, factorial(n))
        got = G.coeff(n)
        for i in range(order_t):
            if got.coeff(i) != row.coeff(i):
                return Check(f"implicit EGF {tab}", False, f"z^{n} t^{i}")
    return Check("implicit EGF", True, f"r=({tab.r0},{tab.r1},{tab.rinf}) g=({tab.g0},{tab.g1},{tab.ginf})")


def sin2_check(order_t: int = 8, order_z: int = 8) -> Check:
    """For r = (1/2, 1/2, 0) the solver's s is sin^2(z sqrt(t(1-t))/2 + asin sqrt t)."""
    tab = Tableau(F(1, 2), F(1, 2), 0, 1, -1, 0)
    s, _ = implicit_s_solver(tab, order_t, order_z)
    sp, _, _, _ = _c_parts("I", order_z)
    closed = sp.subs_scale(_rf(F(1, 2)))
    for n in range(order_z):
        poly = reduce_to_polys(closed)[n]
        for i in range(order_t):
            if s.coeff(n).coeff(i) != poly.coeff(i):
                return Check("sin^2 form of s", False, f"z^{n} t^{i}")
    return Check("sin^2 form of s", True, f"bi-order ({order_t},{order_z})")
