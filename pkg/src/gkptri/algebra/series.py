"""Truncated power series in z over a pluggable exact coefficient ring.

A ring is a small descriptor with ``zero``, ``one``, ``coerce`` and
``inv``. Besides Q, t-polynomials and t-rational functions, the
coefficients can themselves be truncated t-series, which gives the
doubly truncated (t, z) series used by the implicit solver.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Callable, Sequence

from .poly import Poly, RatFunc
from .scalars import ParameterError, hyp_term, rat, SingularTermError


class Ring:
    name = "ring"

    def coerce(self, x):
        raise NotImplementedError

    @property
    def zero(self):
        return self.coerce(0)

    @property
    def one(self):
        return self.coerce(1)

    def inv(self, x):
        raise NotImplementedError

    def is_zero(self, x) -> bool:
        return x == self.zero


class _Rationals(Ring):
    name = "Rat"

    def coerce(self, x):
        return rat(x)

    def inv(self, x):
        if x == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / x


class _Polys(Ring):
    name = "PolyT"

    def coerce(self, x):
        if isinstance(x, Poly):
            return x
        if isinstance(x, RatFunc):
            return x.to_poly()
        return Poly.const(x)

    def inv(self, x):
        if not x.is_const() or x.is_zero():
            raise ArithmeticError("only nonzero constants are units in Q[t]")
        return Poly.const(1 / x.coeff(0))


class _RatFuncs(Ring):
    name = "RatFuncT"

    def coerce(self, x):
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, Poly):
            return RatFunc.from_poly(x)
        return RatFunc(rat(x))

    def inv(self, x):
        return x.inverse()


class SeriesRing(Ring):
    """Truncated series of a fixed order, used as a coefficient ring."""

    def __init__(self, order: int, base: Ring | None = None):
        self.order = order
        self.base = base or QQ
        self.name = f"Series[{self.base.name},{order}]"

    def coerce(self, x):
        if isinstance(x, Series):
            if x.order != self.order:
                x = x.truncate(self.order) if x.order > self.order else None
                if x is None:
                    raise ValueError("cannot widen a truncated series")
            return x
        return Series.const(x, self.order, self.base)

    def inv(self, x):
        return x.inverse()

    def __eq__(self, other):
        return isinstance(other, SeriesRing) and other.order == self.order and other.base == self.base

    def __hash__(self):
        return hash(("series", self.order))


QQ = _Rationals()
POLY = _Polys()
RATFUNC = _RatFuncs()


class Series:
    """``sum_{n < order} c[n] z^n`` with coefficients in ``ring``."""

    __slots__ = ("c", "ring")

    def __init__(self, coeffs: Sequence, order: int | None = None, ring: Ring = QQ):
        cs = [ring.coerce(x) for x in coeffs]
        if order is not None:
            if len(cs) > order:
                cs = cs[:order]
            else:
                cs = cs + [ring.zero] * (order - len(cs))
        self.c = cs
        self.ring = ring

    @classmethod
    def _raw(cls, cs: list, ring: Ring) -> "Series":
        s = object.__new__(cls)
        s.c = cs
        s.ring = ring
        return s

    @classmethod
    def const(cls, a, order: int, ring: Ring = QQ) -> "Series":
        return cls([a], order, ring)

    @classmethod
    def z(cls, order: int, ring: Ring = QQ) -> "Series":
        return cls([0, 1], order, ring)

    @property
    def order(self) -> int:
        return len(self.c)

    def coeff(self, n: int):
        return self.c[n] if 0 <= n < len(self.c) else self.ring.zero

    def truncate(self, order: int) -> "Series":
        return Series(self.c[:order], order, self.ring)

    def _same(self, other) -> "Series":
        if isinstance(other, Series):
            if other.ring is not self.ring and other.ring != self.ring:
                raise TypeError(f"series over {other.ring.name} mixed with {self.ring.name}")
            return other
        return Series.const(other, self.order, self.ring)

    def __add__(self, other):
        o = self._same(other)
        n = min(self.order, o.order)
        return Series._raw([self.c[i] + o.c[i] for i in range(n)], self.ring)

    __radd__ = __add__

    def __neg__(self):
        return Series._raw([-x for x in self.c], self.ring)

    def __sub__(self, other):
        o = self._same(other)
        n = min(self.order, o.order)
        return Series._raw([self.c[i] - o.c[i] for i in range(n)], self.ring)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, a) -> "Series":
        """Multiply every coefficient by the scalar or ring element ``a``."""
        return Series._raw([x * a for x in self.c], self.ring)

    def __mul__(self, other):
        if not isinstance(other, Series):
            if isinstance(other, (int, Fraction)):
                return self.scale(Fraction(other))
            return self.scale(self.ring.coerce(other))
        o = self._same(other)
        n = min(self.order, o.order)
        zero = self.ring.zero
        a, b = self.c, o.c
        out = []
        for k in range(n):
            acc = zero
            for i in range(k + 1):
                x = a[i]
                y = b[k - i]
                if not _is_zero(x) and not _is_zero(y):
                    acc = acc + x * y
            out.append(acc)
        return Series._raw(out, self.ring)

    def __rmul__(self, other):
        return self * other

    def inverse(self) -> "Series":
        a0inv = self.ring.inv(self.c[0])
        n = self.order
        out = [a0inv]
        for k in range(1, n):
            acc = self.ring.zero
            for i in range(1, k + 1):
                if not _is_zero(self.c[i]):
                    acc = acc + self.c[i] * out[k - i]
            out.append(-(acc * a0inv))
        return Series._raw(out, self.ring)

    def __truediv__(self, other):
        if isinstance(other, Series):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            return self.scale(1 / Fraction(other))
        return self.scale(self.ring.inv(self.ring.coerce(other)))

    def __rtruediv__(self, other):
        return Series.const(other, self.order, self.ring) * self.inverse()

    def __pow__(self, q):
        return self.pow(q)

    def pow(self, q) -> "Series":
        """``self^q``. Non-integer ``q`` needs constant term exactly one.

        Coefficients follow the binomial series, computed with the
        first-order recurrence that ``f = a^q`` satisfies (``a f' = q a' f``).
        """
        q = rat(q)
        one = self.ring.one
        if q.denominator == 1:
            e = int(q)
            if e == 0:
                return Series.const(one, self.order, self.ring)
            if e < 0:
                return self.inverse().pow(-e)
            out, base = Series.const(one, self.order, self.ring), self
            while e:
                if e & 1:
                    out = out * base
                base = base * base if e > 1 else base
                e >>= 1
            return out
        if self.c[0] != one:
            raise ParameterError("non-integer power needs constant term 1")
        return self._pow_unit(q)

    def _pow_unit(self, q: Fraction) -> "Series":
        a = self.c
        n = self.order
        f = [self.ring.one]
        for m in range(1, n):
            acc = self.ring.zero
            for k in range(1, m + 1):
                if _is_zero(a[k]):
                    continue
                w = (q + 1) * k - m
                if w:
                    acc = acc + a[k] * f[m - k] * w
            f.append(acc * Fraction(1, m))
        return Series._raw(f, self.ring)

    def sqrt(self) -> "Series":
        return self.pow(Fraction(1, 2))

    def exp(self) -> "Series":
        if not _is_zero(self.c[0]):
            raise ParameterError("exp needs zero constant term")
        a = self.c
        f = [self.ring.one]
        for m in range(1, self.order):
            acc = self.ring.zero
            for k in range(1, m + 1):
                if not _is_zero(a[k]):
                    acc = acc + a[k] * f[m - k] * k
            f.append(acc * Fraction(1, m))
        return Series._raw(f, self.ring)

    def log(self) -> "Series":
        if self.c[0] != self.ring.one:
            raise ParameterError("log needs constant term 1")
        d = self.derivative() * self.inverse().truncate(self.order - 1)
        return Series._raw([self.ring.zero] + [d.c[m - 1] * Fraction(1, m) for m in range(1, self.order)], self.ring)

    def derivative(self) -> "Series":
        """z-derivative; the result is one order shorter."""
        return Series._raw([self.c[i] * i for i in range(1, self.order)], self.ring)

    def compose(self, inner: "Series") -> "Series":
        """``self(inner(z))`` for inner with zero constant term."""
        if not _is_zero(inner.c[0]):
            raise ParameterError("composition needs inner constant term 0")
        return self.eval_poly(inner)

    def eval_poly(self, x: "Series") -> "Series":
        """Horner evaluation of the coefficient list at a series ``x``."""
        n = x.order
        acc = Series.const(self.ring.zero, n, x.ring)
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def subs_scale(self, a) -> "Series":
        """``self(a z)`` for a scalar or ring element ``a``."""
        out, p = [], self.ring.one
        for x in self.c:
            out.append(x * p)
            p = p * a
        return Series._raw(out, self.ring)

    def map(self, fn: Callable, ring: Ring | None = None) -> "Series":
        r = ring or self.ring
        return Series([fn(x) for x in self.c], self.order, r)

    def is_zero(self) -> bool:
        return all(_is_zero(x) for x in self.c)

    def __eq__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        n = min(self.order, other.order)
        return all(self.c[i] == other.c[i] for i in range(n))

    def __hash__(self):
        return hash(tuple(self.c))

    def first_mismatch(self, other: "Series") -> int | None:
        n = min(self.order, other.order)
        for i in range(n):
            if self.c[i] != other.c[i]:
                return i
        return None

    def __repr__(self):
        return f"Series[{self.ring.name}]({self.c!r})"


def _is_zero(x) -> bool:
    if isinstance(x, Fraction):
        return x == 0
    if isinstance(x, Poly):
        return x.is_zero()
    if isinstance(x, RatFunc):
        return x.num.is_zero()
    if isinstance(x, Series):
        return x.is_zero()
    return x == 0


def exp_series(order: int, scale=1, ring: Ring = QQ) -> Series:
    """``exp(scale * z)`` with ``scale`` a scalar or ring element."""
    cs, term = [], ring.one
    for n in range(order):
        cs.append(term)
        term = term * scale * Fraction(1, n + 1)
    return Series(cs, order, ring)


def gauss_2f1_series(a, b, c, order: int) -> Series:
    """Maclaurin coefficients of 2F1(a, b; c | w) up to ``w^(order-1)``.

    Terminating upper parameters give a polynomial; a non-positive
    integer ``c`` that is not preceded by termination is rejected.
    """
    cs = []
    for k in range(order):
        try:
            cs.append(hyp_term([a, b], [1, c], k))
        except SingularTermError as exc:
            raise ParameterError(f"2F1 lower parameter {c} is singular: {exc}") from None
    return Series(cs, order, QQ)


def bivariate(order_t: int, order_z: int) -> Ring:
    """Ring of t-series to use as coefficients for a (t, z) double series."""
    return SeriesRing(order_t, QQ)


def t_series(coeffs: Sequence, order_t: int) -> Series:
    return Series(coeffs, order_t, QQ)


def poly_to_series(p: Poly, order: int) -> Series:
    return Series(p.coeffs(order), order, QQ)
