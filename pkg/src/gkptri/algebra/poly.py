"""Univariate polynomials and reduced rational functions over Q."""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .scalars import format_rat, rat

_ZERO = Fraction(0)
_ONE = Fraction(1)


def _trim(cs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(cs)
    while n and cs[n - 1] == 0:
        n -= 1
    return tuple(cs[:n])


class Poly:
    """Polynomial with Fraction coefficients, lowest degree first."""

    __slots__ = ("c",)

    def __init__(self, coeffs: Iterable = ()):
        self.c = _trim([rat(x) for x in coeffs])

    @classmethod
    def _raw(cls, cs: tuple) -> "Poly":
        p = object.__new__(cls)
        p.c = cs
        return p

    @classmethod
    def const(cls, a) -> "Poly":
        return cls([a])

    @classmethod
    def t(cls) -> "Poly":
        return cls([0, 1])

    @classmethod
    def monomial(cls, k: int, a=1) -> "Poly":
        return cls([0] * k + [a])

    @property
    def degree(self) -> int:
        return len(self.c) - 1

    def is_zero(self) -> bool:
        return not self.c

    def is_const(self) -> bool:
        return len(self.c) <= 1

    def coeff(self, k: int) -> Fraction:
        return self.c[k] if 0 <= k < len(self.c) else _ZERO

    def lc(self) -> Fraction:
        return self.c[-1] if self.c else _ZERO

    def coeffs(self, n: int | None = None) -> list[Fraction]:
        if n is None:
            return list(self.c)
        return [self.coeff(k) for k in range(n)]

    @staticmethod
    def _coerce(other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly._raw(_trim([Fraction(other)]))
        return NotImplemented

    def __add__(self, other):
        o = Poly._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        a, b = self.c, o.c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return Poly._raw(_trim(out))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-x for x in self.c))

    def __sub__(self, other):
        o = Poly._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return Poly._raw(())
            return Poly._raw(tuple(x * other for x in self.c))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.c, other.c
        if not a or not b:
            return Poly._raw(())
        out = [_ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return Poly._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out, base = Poly._raw((_ONE,)), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __eq__(self, other):
        o = Poly._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.c == o.c

    def __hash__(self):
        return hash(self.c)

    def __call__(self, x):
        acc = _ZERO if isinstance(x, (int, Fraction)) else x * 0
        for a in reversed(self.c):
            acc = acc * x + a
        return acc

    def compose(self, inner: "Poly") -> "Poly":
        return self(inner) if self.c else Poly()

    def derivative(self) -> "Poly":
        return Poly._raw(tuple(i * x for i, x in enumerate(self.c) if i))

    def scale(self, a) -> "Poly":
        """``p(a t)``."""
        a = rat(a)
        return Poly._raw(_trim([x * a**i for i, x in enumerate(self.c)]))

    def reverse(self, n: int) -> "Poly":
        """``t^n p(1/t)``; needs ``deg p <= n``."""
        if self.degree > n:
            raise ValueError("reverse length shorter than degree")
        return Poly(list(reversed(self.coeffs(n + 1))))

    def divmod(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        r = list(self.c)
        db, lb = other.degree, other.c[-1]
        if len(r) - 1 < db:
            return Poly(), self
        q = [_ZERO] * (len(r) - db)
        for i in range(len(r) - 1, db - 1, -1):
            f = r[i] / lb
            if f:
                q[i - db] = f
                for j, y in enumerate(other.c):
                    r[i - db + j] -= f * y
        return Poly(q), Poly(r[:db])

    def exact_div(self, other: "Poly") -> "Poly":
        q, r = self.divmod(other)
        if not r.is_zero():
            raise ArithmeticError("inexact polynomial division")
        return q

    def monic(self) -> "Poly":
        if not self.c:
            return self
        l = self.c[-1]
        return Poly._raw(tuple(x / l for x in self.c))

    def to_str(self, var: str = "t") -> str:
        if not self.c:
            return "0"
        parts = []
        for i, a in enumerate(self.c):
            if not a:
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            if not mono:
                parts.append(format_rat(a))
            elif a == 1:
                parts.append(mono)
            elif a == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{format_rat(a)}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"Poly({self.to_str()})"


def poly_gcd(a: Poly, b: Poly) -> Poly:
    while not b.is_zero():
        a, b = b, a.divmod(b)[1]
    return a.monic()


class RatFunc:
    """Reduced quotient ``num/den`` with ``den`` monic and coprime to ``num``."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, _reduced: bool = False):
        num = num if isinstance(num, Poly) else Poly._coerce(rat(num))
        den = Poly.const(1) if den is None else (den if isinstance(den, Poly) else Poly._coerce(rat(den)))
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if not _reduced:
            if num.is_zero():
                den = Poly.const(1)
            else:
                if not den.is_const():
                    g = poly_gcd(num, den)
                    if not g.is_const():
                        num, den = num.exact_div(g), den.exact_div(g)
                l = den.lc()
                if l != 1:
                    num, den = num * (1 / l), den * (1 / l)
        self.num, self.den = num, den

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFunc":
        return cls(p, Poly.const(1), _reduced=True)

    @staticmethod
    def _coerce(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc.from_poly(other)
        if isinstance(other, (int, Fraction)):
            return RatFunc.from_poly(Poly._coerce(other))
        return NotImplemented

    def is_poly(self) -> bool:
        return self.den.is_const()

    def to_poly(self) -> Poly:
        if not self.is_poly():
            raise ArithmeticError("rational function is not a polynomial")
        return self.num

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        o = RatFunc._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, _reduced=True)

    def __sub__(self, other):
        o = RatFunc._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RatFunc(Poly(), None, _reduced=True)
            return RatFunc(self.num * other, self.den, _reduced=True)
        o = RatFunc._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero rational function")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        o = RatFunc._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return RatFunc._coerce(other) * self.inverse()

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return RatFunc(self.num**e, self.den**e, _reduced=True)

    def __eq__(self, other):
        o = RatFunc._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        return self.num(x) / self.den(x)

    def compose(self, inner: "RatFunc") -> "RatFunc":
        """``self(inner(t))`` for a rational inner function."""
        inner = RatFunc._coerce(inner)
        a, b = inner.num, inner.den
        d = max(self.num.degree, self.den.degree, 0)

        def homog(p: Poly) -> Poly:
            acc = Poly()
            for i, x in enumerate(p.c):
                if x:
                    acc = acc + (a**i) * (b ** (d - i)) * x
            return acc

        return RatFunc(homog(self.num), homog(self.den))

    def derivative(self) -> "RatFunc":
        return RatFunc(self.num.derivative() * self.den - self.num * self.den.derivative(), self.den * self.den)

    def to_str(self, var: str = "t") -> str:
        if self.is_poly():
            return self.num.to_str(var)
        return f"({self.num.to_str(var)})/({self.den.to_str(var)})"

    def __repr__(self):
        return f"RatFunc({self.to_str()})"


T = Poly.t()
