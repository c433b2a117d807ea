"""Exact rational scalars: generalized factorials, binomials, differences,
hypergeometric terms, and strict parsing/formatting."""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

Rat = Fraction
RatLike = Union[int, Fraction]

_RAT_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


class ParameterError(ValueError):
    """A parameter set violates an operation's precondition."""


class SingularTermError(ParameterError):
    """A lower Pochhammer factor vanishes before any upper factor does."""


def rat(x: RatLike | str) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return parse_rat(x)
    raise TypeError(f"not an exact rational: {x!r}")


def parse_rat(text: str) -> Fraction:
    """Parse ``p/q`` or an integer. Decimals and floats are rejected."""
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"malformed rational {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def parse_rat_list(text: str) -> list[Fraction]:
    out = []
    for i, piece in enumerate(text.split(",")):
        try:
            out.append(parse_rat(piece))
        except ValueError as exc:
            raise ValueError(f"item {i} ({piece.strip()!r}): {exc}") from None
    return out


def format_rat(q: RatLike) -> str:
    q = rat(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def gen_factorial(x: RatLike, n: int, step: RatLike = 1, direction: str = "falling") -> Fraction:
    """``x (x -/+ step) ... (x -/+ (n-1) step)``; the empty product is 1."""
    if n < 0:
        raise ParameterError("generalized factorial needs n >= 0")
    x, step = rat(x), rat(step)
    if direction == "rising":
        sgn = 1
    elif direction == "falling":
        sgn = -1
    else:
        raise ValueError(f"direction must be 'rising' or 'falling', got {direction!r}")
    out = Fraction(1)
    for i in range(n):
        out *= x + sgn * i * step
    return out


def falling(x: RatLike, n: int, step: RatLike = 1) -> Fraction:
    return gen_factorial(x, n, step, "falling")


def rising(x: RatLike, n: int, step: RatLike = 1) -> Fraction:
    return gen_factorial(x, n, step, "rising")


def binom(x: RatLike, k: int) -> Fraction:
    """Binomial coefficient with rational top; zero for negative ``k``."""
    if k < 0:
        return Fraction(0)
    x = rat(x)
    if x.denominator == 1 and x >= 0:
        return Fraction(comb(int(x), k))
    return falling(x, k) / factorial(k)


def finite_difference(values: Sequence[RatLike], order: int = 1, backward: bool = False) -> list[Fraction]:
    """Repeated differences of a sampled sequence.

    Forward: entry i is the difference of order ``order`` at sample i.
    Backward: entry i is the backward difference at sample ``i + order``
    (the first ``order`` samples have none), so both lists hold the same
    numbers; only the anchoring differs.
    """
    vals = [rat(v) for v in values]
    for _ in range(order):
        vals = [vals[i + 1] - vals[i] for i in range(len(vals) - 1)]
    return vals


def _first_zero(params: Iterable[Fraction], k: int) -> int | None:
    best = None
    for a in params:
        if a.denominator == 1 and a <= 0 and -a < k:
            idx = int(-a)
            best = idx if best is None else min(best, idx)
    return best


def hyp_term(upper: Sequence[RatLike], lower: Sequence[RatLike], k: int) -> Fraction:
    """``prod_i (A_i)^{k rising} / prod_j (C_j)^{k rising}``.

    If an upper factor vanishes strictly before the first vanishing lower
    factor the term is 0. A lower factor vanishing first, or at the same
    position (0/0), is singular.
    """
    if k < 0:
        raise ParameterError("hypergeometric term index must be >= 0")
    up = [rat(a) for a in upper]
    lo = [rat(c) for c in lower]
    zu, zl = _first_zero(up, k), _first_zero(lo, k)
    if zu is not None and (zl is None or zu < zl):
        return Fraction(0)
    if zl is not None:
        raise SingularTermError(f"lower parameter hits zero at factor {zl} of term {k}")
    num = Fraction(1)
    for a in up:
        num *= rising(a, k)
    den = Fraction(1)
    for c in lo:
        den *= rising(c, k)
    return num / den


def hyp_terminating_sum(upper: Sequence[RatLike], lower: Sequence[RatLike], x: RatLike, kmax: int) -> Fraction:
    """Sum of ``hyp_term(upper, lower + [1], k) x^k`` for ``k <= kmax``."""
    x = rat(x)
    total = Fraction(0)
    for k in range(kmax + 1):
        total += hyp_term(upper, list(lower) + [1], k) * x**k
    return total


def integer_value(q: Fraction) -> int | None:
    return int(q) if q.denominator == 1 else None
