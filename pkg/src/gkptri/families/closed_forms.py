"""Registry of explicit entry formulas, each paired with the recurrence
triangle it is meant to reproduce.

Every formula is addressed by an id and a variant name, takes keyword
arguments, and evaluates an entry ``(n, k)`` exactly. ``cross_check``
compares a formula with the recurrence on its declared domain.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial
from typing import Callable

from ..algebra import ParameterError, Poly, SingularTermError, falling, format_rat, hyp_term, rat, rising
from ..core import GkpParams, Triangle, triangle
from ..report import Check
from .named import eulerian_params, narayana_e, narayana_rs, narayana_s, stirling_params

F = Fraction


def _hyp2f1_at(upper, lower, x, kmax: int) -> Fraction:
    """Terminating 2F1 (lower list excludes the implicit 1) at x."""
    return sum((hyp_term(upper, [1, *lower], j) * F(x) ** j for j in range(kmax + 1)), F(0))


# ------------------------------------------------------- Hsu-Shiue rows


def s00(variant: str, n: int, k: int, r) -> Fraction:
    r = rat(r)
    if variant == "i":
        return comb(n, k) * r ** (n - k)
    if variant == "ii":
        return comb(n, k) * falling(r, n - k)
    if variant == "iii":
        return comb(n, k) * falling(n + r - 1, n - k)
    raise ValueError(variant)


def s12(variant: str, n: int, k: int, r) -> Fraction:
    """``S_{n,k}(1, 2; r)``.

    ``regularized`` merges 1/(2k-n)! into the 2F1 so that a non-positive
    lower parameter is harmless; ``product`` is the term-times-series form
    and is only defined when that lower parameter is positive.
    """
    r = rat(r)
    m = 2 * k - n
    if variant == "regularized":
        total = F(0)
        for j in range(n - k + 1):
            if m + j < 0:
                continue
            total += rising(-r, j) * rising(k - n, j) * F(2) ** j / (factorial(j) * factorial(m + j))
        return comb(n, k) * factorial(k) * F(1, 2 ** (n - k)) * total
    if variant == "product":
        pre = F(2) ** (n - k) * hyp_term([F(-n, 2), F(-n, 2) + F(1, 2)], [1], n - k)
        return pre * _hyp2f1_at([-r, k - n], [m + 1], 2, n - k)
    raise ValueError(variant)


def sm2m1(variant: str, n: int, k: int, r) -> Fraction:
    """``S_{n,k}(-2, -1; r)``; the series is read as 1 at (0, 0)."""
    r = rat(r)
    series = _hyp2f1_at([r - 1, k - n], [k - 2 * n], 2, n - k)
    if variant == "binomial":
        return comb(n, k) * F(factorial(2 * n - k), factorial(n)) * F(1, 2 ** (n - k)) * series
    if variant == "product":
        return F(-1, 2) ** (n - k) * hyp_term([-n, n + 1], [1], n - k) * series
    raise ValueError(variant)


def bessel_rank0(variant: str, n: int, k: int, r) -> Fraction:
    """Summation-free r-Bessel numbers.

    ``B``: second kind, r in {0, 1, 2}; ``bhat``: first kind, r in {-1, 0, 1}.
    """
    r = rat(r)
    if variant == "B":
        if r not in (0, 1, 2):
            raise ParameterError("second-kind rank-0 formula needs r in {0,1,2}")
        m = 2 * k - n + int(r)
        if m < 0:
            return F(0)
        tail = {0: 1, 1: n + 1, 2: n * (n + 1) + 2 * (k + 1)}[int(r)]
        return comb(n, k) * F(factorial(k), factorial(m)) * F(1, 2 ** (n - k)) * tail
    if variant == "bhat":
        if r not in (-1, 0, 1):
            raise ParameterError("first-kind rank-0 formula needs r in {-1,0,1}")
        m = 2 * n - k - 1 + int(r)  # (2n-k)! / (2n-k)^{1-r falling}
        if m < 0:
            # limiting value; only diagonal entries reach here
            if k != n:
                raise ArithmeticError("indeterminate off-diagonal entry")
            return F(1)
        tail = {-1: k * (k + 1) - 2 * n, 0: k, 1: 1}[int(r)]
        return comb(n, k) * F(factorial(m), factorial(n)) * F(1, 2 ** (n - k)) * tail
    raise ValueError(variant)


def bessel_r_altgen(variant: str, n: int, k: int, r) -> Fraction:
    """``B^{(r)}_{n,k}`` for natural r, with an r+1 term sum."""
    r = rat(r)
    if r.denominator != 1 or r < 0:
        raise ParameterError("r must be a natural number")
    r = int(r)
    pre = F(1, 2 ** (n - k) * factorial(n - k)) / comb(n + r, r) * falling(n + r, 2 * n - 2 * k)
    if variant == "first":
        s = sum(comb(k + l, l) * comb(n - k, r - l) for l in range(r + 1))
    elif variant == "second":
        s = sum(comb(k + l // 2, l // 2) * comb(n, r - l) for l in range(r + 1))
    else:
        raise ValueError(variant)
    return pre * s


# -------------------------------------------------------- Eulerian rows


def e_simple(variant: str, n: int, k: int, c0, cinf=None, a=None) -> Fraction:
    c0 = rat(c0)
    if variant == "i":
        return comb(n, k) * c0 ** (n - k) * rat(cinf) ** k
    if variant == "ii":
        return comb(n, k) * rising(c0 + k, n - k) * falling(rat(cinf), k)
    if variant == "iii":
        return (-1) ** k * comb(n, k) * falling(c0, n, rat(a))
    raise ValueError(variant)


def e_singleprog(variant: str, n: int, k: int, zeta, p) -> Fraction:
    """``E_{n,k}(-1, 2; 2-zeta+2p, zeta-2p)`` with p natural, zeta in {0, 1}."""
    zeta, p = int(zeta), int(p)
    if zeta not in (0, 1) or p < 0:
        raise ParameterError("need zeta in {0,1} and natural p")
    top = 2 * k + 2 * p + 1 - zeta
    v = factorial(n) * (comb(n + 1, top) if 0 <= top else 0)
    s = 0
    for l in range(p):
        j = k + p - l
        s += (-1) ** l * rising(2 - zeta + 2 * l, n) * (comb(n + 1, j) if j >= 0 else 0)
    return F(v) - (-1) ** (k + p) * s


def e_hyp(variant: str, n: int, k: int, c0) -> Fraction:
    c0 = rat(c0)
    if variant == "plain":
        return rising(c0, n) * hyp_term([F(-n, 2), F(-n, 2) + F(1, 2)], [1, c0 / 2 + F(1, 2)], k)
    if variant == "shifted":
        return rising(c0 + 1, n) * hyp_term([F(-n, 2), F(-n, 2) - F(1, 2)], [1, c0 / 2 + F(1, 2)], k)
    raise ValueError(variant)


def e_midtrim_pair(variant: str, n: int, k: int, c) -> Fraction:
    """``N^E_{n,k}(2; c-1, 1-c)`` as a difference of two terms."""
    c = rat(c)
    up, lo = [-n + 1, -n + c], [1, c]
    second = hyp_term(up, lo, k - 1) if k >= 1 else F(0)
    return rising(c - 1, n) * (hyp_term(up, lo, k) - second)


# ------------------------------------------------ Narayana term tables

# (section, letter) -> (constructor of params from c, term(n,k,c), reversed(n,k,c))
def _t_sa(n, k, c):
    return rising(c, n) * hyp_term([-n, n + c], [1, F(1, 2) + c / 2], k)


def _t_sa_rev(n, k, c):
    return falling(-2 * c, n, 4) * hyp_term([-n, -n + F(1, 2) - c / 2], [1, -2 * n + 1 - c], n - k)


def _t_sb(n, k, c):
    return rising(c, n) * hyp_term([-n, n + 1], [1, c], k)


def _t_sb_rev(n, k, c):
    return falling(-2, n, 4) * hyp_term([-n, -n + 1 - c], [1, -2 * n], n - k)


def _t_sc(n, k, c):
    return rising(c - 1, n) * hyp_term([-n + 1, n], [1, c], k)


def _t_ea(n, k, c):
    return rising(c, n) * hyp_term([-n, -n + F(1, 2) - c / 2], [1, F(1, 2) + c / 2], k)


def _t_ea_rev(n, k, c):
    return _t_ea(n, n - k, c)


def _t_eb(n, k, c):
    return rising(c, n) * hyp_term([-n, -n - 1 + c], [1, c], k)


def _t_eb_rev(n, k, c):
    return rising(2 - c, n) * hyp_term([-n, -n + 1 - c], [1, 2 - c], n - k)


def _flip(fn):
    return lambda n, k, c: fn(n, n - k, c)


NARAYANA_T2: dict[str, tuple[Callable, Callable | None, Callable | None]] = {
    "I.a": (lambda c: narayana_s(2, c, -2 * c), _t_sa, _t_sa_rev),
    "I.b": (lambda c: narayana_s(2, c, -2), _t_sb, _t_sb_rev),
    "I.c": (lambda c: narayana_s(2, c - 1, 0), _t_sc, None),
    "II.a": (lambda c: narayana_rs(2, -2 * c, c), _flip(_t_sa_rev), _flip(_t_sa)),
    "II.b": (lambda c: narayana_rs(2, -2, c), _flip(_t_sb_rev), _flip(_t_sb)),
    "II.c": (lambda c: narayana_rs(2, 0, c - 1), None, _flip(_t_sc)),
    "III.a": (lambda c: narayana_e(2, c, c), _t_ea, _t_ea_rev),
    "III.b": (lambda c: narayana_e(2, c, 2 - c), _t_eb, _t_eb_rev),
}


def narayana_t2(variant: str, n: int, k: int, c) -> Fraction:
    """Variant ``"<section>.<letter>"`` or with suffix ``":rev"``."""
    key, _, which = variant.partition(":")
    if key not in NARAYANA_T2:
        raise ValueError(f"unknown table entry {key!r}")
    _, term, rev = NARAYANA_T2[key]
    fn = rev if which == "rev" else term
    if fn is None:
        raise ParameterError(f"no {'reversed ' if which == 'rev' else ''}term representation for {key}")
    return fn(n, k, rat(c))


# ---------------------------------------------------- OEIS normalizations

# key -> (section.letter, c, rising start for normalization, sign kind,
#         row-polynomial builder(n) -> Poly, OEIS id)


def _f21_poly(A, B, C, n: int, arg: str) -> Poly:
    """Terminating 2F1(A,B;C | x) as a polynomial with x in {t, -t, 1/t, -1/t}
    multiplied through by t^n in the reciprocal cases."""
    cs = []
    j = 0
    while True:
        term = hyp_term([A, B], [1, C], j)
        if term == 0 and j > n:
            break
        cs.append(term)
        j += 1
        if j > n + 1:
            break
    if arg in ("t", "-t"):
        sgn = -1 if arg == "-t" else 1
        return Poly([c * sgn**j for j, c in enumerate(cs)])
    sgn = -1 if arg == "-1/t" else 1
    out = [F(0)] * (n + 1)
    for j, c in enumerate(cs):
        if c and n - j < 0:
            raise ArithmeticError("reciprocal series longer than n")
        if c:
            out[n - j] += c * sgn**j
    return Poly(out)


def _rowpoly(A, B, C, arg, pre=lambda n: 1):
    return lambda n: _f21_poly(A(n), B(n), C(n), n, arg) * rat(pre(n))


_h = F(1, 2)
OEIS_T3: dict[str, tuple] = {
    "A063007:Ia": ("I.a", 1, 1, "S", _rowpoly(lambda n: -n, lambda n: n + 1, lambda n: 1, "-t")),
    "A053124": ("I.a", 2, 1, "S", _rowpoly(lambda n: -n, lambda n: n + 2, lambda n: F(3, 2), "-t", lambda n: n + 1)),
    "A033282": ("I.a", 3, 3, "S", _rowpoly(lambda n: -n, lambda n: n + 3, lambda n: 2, "-t")),
    "A086810": (
        "I.b", 0, 2, "S",
        _rowpoly(lambda n: -n, lambda n: -n + 1, lambda n: -2 * n, "-1/t", lambda n: rising(2, n, 4) / rising(2, n)),
    ),
    "A063007:Ib": ("I.b", 1, 1, "S", _rowpoly(lambda n: -n, lambda n: n + 1, lambda n: 1, "-t")),
    "A088617": ("I.b", 2, 2, "S", _rowpoly(lambda n: -n, lambda n: n + 1, lambda n: 2, "-t")),
    "A104684:IIa": ("II.a", 1, 1, "rS", _rowpoly(lambda n: -n, lambda n: n + 1, lambda n: 1, "-1/t")),
    "A053125": ("II.a", 2, 1, "rS", _rowpoly(lambda n: -n, lambda n: n + 2, lambda n: F(3, 2), "-1/t", lambda n: n + 1)),
    "A126216": ("II.a", 3, 3, "rS", _rowpoly(lambda n: -n, lambda n: n + 3, lambda n: 2, "-1/t")),
    "A133336": (
        "II.b", 0, 2, "rS",
        _rowpoly(lambda n: -n, lambda n: -n + 1, lambda n: -2 * n, "-t", lambda n: rising(2, n, 4) / rising(2, n)),
    ),
    "A104684:IIb": ("II.b", 1, 1, "rS", _rowpoly(lambda n: -n, lambda n: n + 1, lambda n: 1, "-1/t")),
    "A060693": ("II.b", 2, 2, "rS", _rowpoly(lambda n: -n, lambda n: n + 1, lambda n: 2, "-1/t")),
    "A008459:IIIa": ("III.a", 1, 1, "E", _rowpoly(lambda n: -n, lambda n: -n, lambda n: 1, "t")),
    "A091044": ("III.a", 2, 1, "E", _rowpoly(lambda n: -n, lambda n: -n - _h, lambda n: F(3, 2), "t", lambda n: n + 1)),
    "A001263": ("III.a", 3, 3, "E", _rowpoly(lambda n: -n, lambda n: -n - 1, lambda n: 2, "t")),
    "A090181": ("III.b", 0, 2, "E", _rowpoly(lambda n: -n, lambda n: -n + 1, lambda n: 2, "1/t")),
    "A008459:IIIb": ("III.b", 1, 1, "E", _rowpoly(lambda n: -n, lambda n: -n, lambda n: 1, "t")),
    "A131198": ("III.b", 2, 2, "E", _rowpoly(lambda n: -n, lambda n: -n + 1, lambda n: 2, "t")),
}


def oeis_normalized_row(key: str, tri_row, n: int) -> list[Fraction]:
    _, _, start, kind, _ = OEIS_T3[key]
    scale = rising(start, n)
    out = []
    for k, x in enumerate(tri_row):
        sgn = {"S": (-1) ** k, "rS": (-1) ** (n - k), "E": 1}[kind]
        out.append(sgn * x / scale)
    return out


def oeis_t3(variant: str, n: int, k: int) -> Fraction:
    """Normalized entry read off the 2F1 row polynomial of a table row."""
    return OEIS_T3[variant][4](n).coeff(k)


def narayana_fh(variant: str, n: int, k: int) -> Fraction:
    """f- and h-vector forms: ``fB``, ``fA``, ``hB``, ``hA``."""
    if variant == "fB":
        return F(comb(n, k) * comb(n + k, k))
    if variant == "fA":
        return F(comb(n, k) * comb(n + k + 2, k), k + 1)
    if variant == "hB":
        return F(comb(n, k) ** 2)
    if variant == "hA":
        return F(comb(n, k) * comb(n + 1, k), k + 1)
    raise ValueError(variant)


_FH = {
    "fB": (lambda: narayana_s(2, 1, -2), 1, "S"),
    "fA": (lambda: narayana_s(2, 3, -6), 3, "S"),
    "hB": (lambda: narayana_e(2, 1, 1), 1, "E"),
    "hA": (lambda: narayana_e(2, 3, 3), 3, "E"),
}


# --------------------------------------------------------------- registry


@dataclass
class Formula:
    fn: Callable
    variants: tuple[str, ...]
    args: tuple[str, ...]
    params: Callable[..., GkpParams] | None
    doc: str
    domain: Callable[[int, int], bool] = field(default=lambda n, k: True)


REGISTRY: dict[str, Formula] = {
    "S_00": Formula(
        s00, ("i", "ii", "iii"), ("r",), None, "S(0,0;r), S(1,1;r), S(-1,1;r) as binomial times power"
    ),
    "S_12": Formula(s12, ("regularized", "product"), ("r",), lambda r: stirling_params(1, 2, r), "S(1,2;r)"),
    "S_m2m1": Formula(sm2m1, ("binomial", "product"), ("r",), lambda r: stirling_params(-2, -1, r), "S(-2,-1;r)"),
    "bessel_rank0": Formula(bessel_rank0, ("B", "bhat"), ("r",), None, "r-Bessel numbers without summation"),
    "bessel_r_altgen": Formula(
        bessel_r_altgen, ("first", "second"), ("r",), lambda r: stirling_params(1, 2, r), "r-Bessel, r+1 terms"
    ),
    "E_simple": Formula(e_simple, ("i", "ii", "iii"), ("c0", "cinf", "a"), None, "E(0,0), E(-1,1), E(a,b;c0,-c0)"),
    "E_singleprog": Formula(
        e_singleprog,
        ("main",),
        ("zeta", "p"),
        lambda zeta, p: eulerian_params(-1, 2, 2 - rat(zeta) + 2 * rat(p), rat(zeta) - 2 * rat(p)),
        "E(-1,2;2-zeta+2p,zeta-2p)",
    ),
    "E_hyp": Formula(e_hyp, ("plain", "shifted"), ("c0",), None, "E(-1,2;c0,0) and E(-1,2;c0+1,1)"),
    "E_midtrim_pair": Formula(
        e_midtrim_pair, ("main",), ("c",), lambda c: narayana_e(2, rat(c) - 1, 1 - rat(c)), "N^E(2;c-1,1-c)",
        domain=lambda n, k: 1 <= k <= n,
    ),
    "narayana_t2": Formula(
        narayana_t2,
        tuple(v for key, (_, t, r) in NARAYANA_T2.items() for v in ((key,) if t else ()) + ((key + ":rev",) if r else ())),
        ("c",),
        None,
        "one-parameter Narayana triangles",
    ),
    "oeis_t3": Formula(oeis_t3, tuple(OEIS_T3), (), None, "normalized OEIS Narayana rows"),
    "narayana_fh": Formula(narayana_fh, tuple(_FH), (), None, "f- and h-vector forms"),
}


def _s00_params(variant, r):
    ab = {"i": (0, 0), "ii": (1, 1), "iii": (-1, 1)}[variant]
    return stirling_params(ab[0], ab[1], r)


def reference_params(fid: str, variant: str, **kw) -> GkpParams:
    """Parameters of the recurrence triangle a formula should reproduce."""
    f = REGISTRY[fid]
    if fid == "S_00":
        return _s00_params(variant, kw["r"])
    if fid == "bessel_rank0":
        return stirling_params(1, 2, kw["r"]) if variant == "B" else stirling_params(-2, -1, kw["r"])
    if fid == "E_simple":
        if variant == "i":
            return eulerian_params(0, 0, kw["c0"], kw["cinf"])
        if variant == "ii":
            return eulerian_params(-1, 1, kw["c0"], kw["cinf"])
        return eulerian_params(kw["a"], kw.get("b", 1), kw["c0"], -rat(kw["c0"]))
    if fid == "E_hyp":
        c0 = rat(kw["c0"])
        return eulerian_params(-1, 2, c0, 0) if variant == "plain" else eulerian_params(-1, 2, c0 + 1, 1)
    if fid == "narayana_t2":
        return NARAYANA_T2[variant.partition(":")[0]][0](rat(kw["c"]))
    if fid == "oeis_t3":
        key, c = OEIS_T3[variant][0], OEIS_T3[variant][1]
        return NARAYANA_T2[key][0](F(c))
    if fid == "narayana_fh":
        return _FH[variant][0]()
    return f.params(**kw)


def closed_form_eval(fid: str, variant: str, n: int, k: int, **kw) -> Fraction:
    if fid not in REGISTRY:
        raise ValueError(f"unknown formula id {fid!r}")
    f = REGISTRY[fid]
    if variant not in f.variants:
        raise ValueError(f"unknown variant {variant!r} for {fid}; choose from {', '.join(f.variants)}")
    if not (0 <= k <= n):
        raise ParameterError("entry outside the triangle")
    kw = {a: v for a, v in kw.items() if v is not None}
    return f.fn(variant, n, k, **kw)


def reference_entry(fid: str, variant: str, tri: Triangle, n: int, k: int) -> Fraction:
    """Recurrence value in the normalization a formula uses."""
    x = tri.entry(n, k)
    if fid == "oeis_t3":
        return oeis_normalized_row(variant, tri.rows[n], n)[k]
    if fid == "narayana_fh":
        _, start, kind = _FH[variant]
        sgn = (-1) ** k if kind == "S" else 1
        return sgn * x / rising(start, n)
    return x


def cross_check(fid: str, variant: str, N: int, **kw) -> Check:
    """Compare a formula with its recurrence triangle for n <= N.

    Entries whose term representation is singular count as skipped; a
    check with every entry skipped fails.
    """
    params = reference_params(fid, variant, **kw)
    tri = triangle(params, N)
    label = f"{fid}[{variant}]" + "".join(f" {a}={format_rat(rat(v))}" for a, v in kw.items())
    dom = REGISTRY[fid].domain
    tested = skipped = 0
    for n in range(N + 1):
        for k in range(n + 1):
            if not dom(n, k):
                continue
            try:
                got = closed_form_eval(fid, variant, n, k, **kw)
            except SingularTermError:
                skipped += 1
                continue
            want = reference_entry(fid, variant, tri, n, k)
            tested += 1
            if got != want:
                return Check(label, False, f"n={n} k={k}: formula {got} recurrence {want}")
    ok = tested > 0
    return Check(label, ok, f"{tested} entries, {skipped} singular")


def curious_identity_check(r, N: int) -> Check:
    """``bhat^{(r)}_{n+1,k+1} = B^{(r)}_{2n-k,n}`` for r in {0, 1}."""
    from .identities import S_entry

    for n in range(N + 1):
        for k in range(n + 1):
            if S_entry(-2, -1, r, n + 1, k + 1) != S_entry(1, 2, r, 2 * n - k, n):
                return Check(f"Bessel duality r={r}", False, f"n={n} k={k}")
    return Check(f"Bessel duality r={r}", True)
