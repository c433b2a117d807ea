"""The six-element group acting on triangles with beta' = -beta, its
sign-extended twelve-element cover, and the Stanton-Sprott involution
on triangles with beta' = beta.

Each element is a lifting (R, S): R is a Moebius map permuting the
points {0, 1, inf} and S a rational multiplier. On generating functions
the element sends G(t, z) to G(R(t), S(t) z); on row polynomials it sends
G_n(t) to S(t)^n G_n(R(t)). Composition ``compose(e1, e2)`` means
"apply e1, then e2" and is the lifting product (R1 o R2, (S1 o R2) S2).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Callable

from .algebra import ParameterError, Poly, RatFunc, T
from .core import GkpParams, Tableau, Triangle, row_polynomial
from .report import Check

INF = "inf"


@dataclass(frozen=True)
class Moebius:
    """``(l + m t) / (r + s t)``, stored up to a common scalar."""

    l: Fraction
    m: Fraction
    r: Fraction
    s: Fraction

    def __post_init__(self):
        vals = [Fraction(x) for x in (self.l, self.m, self.r, self.s)]
        if vals[0] * vals[3] - vals[1] * vals[2] == 0:
            raise ParameterError("degenerate Moebius map")
        lead = next(v for v in vals if v != 0)
        vals = [v / lead for v in vals]
        for name, v in zip("lmrs", vals):
            object.__setattr__(self, name, v)

    def then_apply(self, inner: "Moebius") -> "Moebius":
        """``self o inner``."""
        l, m, r, s = self.l, self.m, self.r, self.s
        L, M, R, S = inner.l, inner.m, inner.r, inner.s
        return Moebius(l * R + m * L, l * S + m * M, r * R + s * L, r * S + s * M)

    def inverse(self) -> "Moebius":
        return Moebius(-self.l, self.r, self.m, -self.s)

    def as_ratfunc(self) -> RatFunc:
        return RatFunc(Poly([self.l, self.m]), Poly([self.r, self.s]))

    def point(self, p):
        """Image of 0, 1 or inf on the projective line."""
        if p == INF:
            num, den = self.m, self.s
        else:
            p = Fraction(p)
            num, den = self.l + self.m * p, self.r + self.s * p
        if den == 0:
            return INF
        return num / den


def _pt_name(v) -> str:
    return INF if v == INF else {Fraction(0): "0", Fraction(1): "1"}.get(v, str(v))


def _sum_rows(fn: Callable[[int, int, tuple], Fraction]):
    def apply(tri: Triangle) -> Triangle:
        return tri.map_rows(lambda n, r: [fn(n, k, r) for k in range(n + 1)])

    return apply


def _rt_row(n, k, r):
    return r[n - k]


def _ubt_row(n, k, r):
    return (-1) ** (n - k) * sum(comb(j, k) * r[j] for j in range(k, n + 1))


def _rur_row(n, k, r):
    return (-1) ** k * sum(comb(n - j, n - k) * r[j] for j in range(0, k + 1))


def _ur_row(n, k, r):
    return (-1) ** k * sum(comb(j, n - k) * r[j] for j in range(n - k, n + 1))


def _ru_row(n, k, r):
    return (-1) ** (n - k) * sum(comb(n - j, k) * r[j] for j in range(0, n - k + 1))


def _p_id(a, b, g, ap, bp, gp):
    return (a, b, g, ap, bp, gp)


def _p_rt(a, b, g, ap, bp, gp):
    return (ap - b, b, gp, a + b, -b, g)


def _p_ubt(a, b, g, ap, bp, gp):
    return (-a - ap, b, -g - gp, ap, -b, gp)


def _p_rur(a, b, g, ap, bp, gp):
    return (a, b, g, b - a - ap, -b, -g - gp)


def _p_ur(a, b, g, ap, bp, gp):
    return (ap - b, b, gp, b - a - ap, -b, -g - gp)


def _p_ru(a, b, g, ap, bp, gp):
    return (-a - ap, b, -g - gp, a + b, -b, g)


@dataclass(frozen=True)
class _Base:
    name: str
    label: str
    R: Moebius
    S: RatFunc
    params: Callable
    row: Callable | None


_F = Fraction
_BASE = {
    "id": _Base("id", "identity", Moebius(0, 1, 1, 0), RatFunc(1), _p_id, None),
    "rt": _Base("rt", "(0 inf)(1)", Moebius(1, 0, 0, 1), RatFunc(T), _p_rt, _rt_row),
    "ubt": _Base("ubt", "(0 1)(inf)", Moebius(1, -1, 1, 0), RatFunc(-1), _p_ubt, _ubt_row),
    "rur": _Base("rur", "(1 inf)(0)", Moebius(0, -1, 1, -1), RatFunc(1 - T), _p_rur, _rur_row),
    "ur": _Base("ur", "(0 inf 1)", Moebius(-1, 1, 0, 1), RatFunc(-T), _p_ur, _ur_row),
    "ru": _Base("ru", "(0 1 inf)", Moebius(1, 0, 1, -1), RatFunc(T - 1), _p_ru, _ru_row),
}
ELEMENT_NAMES = tuple(_BASE)


@dataclass(frozen=True)
class S3Elem:
    """A group element; ``sign = -1`` marks the negated-multiplier copy."""

    base: str
    sign: int = 1

    def __post_init__(self):
        if self.base not in _BASE:
            raise ValueError(f"unknown group element {self.base!r}; choose from {', '.join(_BASE)}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def R(self) -> Moebius:
        return _BASE[self.base].R

    @property
    def S(self) -> RatFunc:
        return _BASE[self.base].S * self.sign

    @property
    def name(self) -> str:
        return self.base if self.sign == 1 else f"-{self.base}"

    def perm(self) -> dict[str, str]:
        return {p: _pt_name(self.R.point(_F(p) if p != INF else INF)) for p in ("0", "1", INF)}


def elements(extended: bool = False) -> list[S3Elem]:
    signs = (1, -1) if extended else (1,)
    return [S3Elem(b, s) for s in signs for b in _BASE]


def identify(R: Moebius, S: RatFunc) -> S3Elem:
    for e in elements(extended=True):
        if e.R == R and e.S == S:
            return e
    raise ValueError("lifting is not a group element")


def compose(e1: S3Elem, e2: S3Elem) -> S3Elem:
    """Apply ``e1`` then ``e2``: lifting product (R1 o R2, (S1 o R2) S2)."""
    R = e1.R.then_apply(e2.R)
    S = e1.S.compose(e2.R.as_ratfunc()) * e2.S
    return identify(R, S)


def inverse(e: S3Elem) -> S3Elem:
    Rb = e.R.inverse()
    return identify(Rb, e.S.compose(Rb.as_ratfunc()).inverse())


def compose_perm(p1: dict, p2: dict) -> dict:
    """Point map of R1 o R2 (R2 first)."""
    return {x: p1[p2[x]] for x in p2}


def _require_normalized(params: GkpParams):
    if params.beta_p != -params.beta:
        raise ParameterError("group action needs beta' = -beta")


def transform_params(e: S3Elem, params: GkpParams) -> GkpParams:
    _require_normalized(params)
    new = GkpParams(*_BASE[e.base].params(*params.as_tuple()))
    return new if e.sign == 1 else new.negated()


def transform_rows(e: S3Elem, tri: Triangle) -> Triangle:
    """Entry-level map; needs no parameters."""
    fn = _BASE[e.base].row
    out = tri if fn is None else _sum_rows(fn)(tri)
    if e.sign == -1:
        out = out.map_rows(lambda n, r: [(-1) ** n * x for x in r])
    return Triangle(out.rows, None)


def transform(e: S3Elem, tri: Triangle) -> Triangle:
    if tri.params is None:
        return transform_rows(e, tri)
    new_params = transform_params(e, tri.params)
    return Triangle(transform_rows(e, tri).rows, new_params)


def lifted_row_polynomial(e: S3Elem, G: Poly, n: int) -> RatFunc:
    """``S(t)^n G_n(R(t))``."""
    return (e.S**n) * RatFunc(G).compose(e.R.as_ratfunc())


def permute_tableau(e: S3Elem, tab: Tableau) -> Tableau:
    """The pair sitting at point q afterwards is the old pair at R(q)."""
    old = tab.pairs()
    perm = e.perm()
    return Tableau.from_pairs({q: old[perm[q]] for q in ("0", "1", INF)})


def cayley_table(extended: bool = False) -> dict[tuple[str, str], str]:
    els = elements(extended)
    return {(a.name, b.name): compose(a, b).name for a in els for b in els}


def check_group_laws(extended: bool = False) -> list[Check]:
    els = elements(extended)
    out = []
    ident = S3Elem("id")
    closed = True
    hom = True
    assoc = True
    for a in els:
        for b in els:
            try:
                ab = compose(a, b)
            except ValueError:
                closed = False
                continue
            if compose_perm(a.perm(), b.perm()) != ab.perm():
                hom = False
            for c in els:
                if compose(ab, c) != compose(a, compose(b, c)):
                    assoc = False
    out.append(Check("closure", closed))
    out.append(Check("associativity", assoc))
    out.append(Check("point-permutation homomorphism", hom))
    inv_ok = all(compose(e, inverse(e)) == ident and compose(inverse(e), e) == ident for e in els)
    out.append(Check("inverses", inv_ok))
    invols = [e.name for e in els if e != ident and compose(e, e) == ident]
    expect = {"rt", "ubt", "rur"} if not extended else None
    if expect is not None:
        out.append(Check("involutions are the three transpositions", set(invols) == expect, ",".join(sorted(invols))))
    return out


def check_triangle_coherence(e: S3Elem, tri: Triangle) -> list[Check]:
    """Parameter map, entry map, lifting and tableau permutation all agree."""
    from .core import to_tableau, triangle  # local to keep import graph flat

    p = tri.params
    out = []
    newp = transform_params(e, p)
    via_rec = triangle(newp, tri.depth)
    via_rows = transform_rows(e, tri)
    out.append(Check(f"{e.name} entries vs recurrence", via_rec.same_entries(via_rows), str(p)))
    lift_ok = all(
        lifted_row_polynomial(e, row_polynomial(tri, n), n) == RatFunc(row_polynomial(via_rec, n))
        for n in range(tri.depth + 1)
    )
    out.append(Check(f"{e.name} lifting", lift_ok, str(p)))
    if p.beta != 0:
        tab_ok = to_tableau(newp) == permute_tableau(e, to_tableau(p))
        out.append(Check(f"{e.name} tableau permutation", tab_ok, str(p)))
    return out


# ------------------------------------------------------ Stanton-Sprott


SS_R = Moebius(0, -1, 1, 1)
SS_S = RatFunc(1 + T)


def stanton_sprott_params(params: GkpParams) -> GkpParams:
    a, b, g, ap, bp, gp = params.as_tuple()
    if bp != b:
        raise ParameterError("Stanton-Sprott map needs beta' = beta")
    return GkpParams(a, b, g, -b + a - ap, b, g - gp)


def stanton_sprott_rows(tri: Triangle) -> Triangle:
    def fn(n, k, r):
        return sum(comb(n - j, n - k) * (-1) ** j * r[j] for j in range(k + 1))

    return Triangle(_sum_rows(fn)(tri).rows, None)


def stanton_sprott(tri: Triangle) -> Triangle:
    rows = stanton_sprott_rows(tri)
    return Triangle(rows.rows, stanton_sprott_params(tri.params) if tri.params else None)


def stanton_sprott_lifted(G: Poly, n: int) -> RatFunc:
    return (SS_S**n) * RatFunc(G).compose(SS_R.as_ratfunc())
