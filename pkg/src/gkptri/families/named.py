"""Named parameter families and their explicit rank-one sums.

Hsu-Shiue type numbers ``S_{n,k}(a, b; r)`` have parameters
``(-a, b, r; 0, 0, 1)``; generalized Eulerian numbers
``E_{n,k}(a, b; c0, cinf)`` have ``(-a, b, c0; a+b, -b, cinf)``.
The Narayana and secant-tangent families are the three shapes on
each of two lines of the tableau plane, each scaled by ``b``.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial
from typing import Callable

from ..algebra import ParameterError, falling, rat, rising
from ..core import GkpParams, Triangle, triangle


def stirling_params(a, b, r) -> GkpParams:
    return GkpParams.of(-rat(a), b, r, 0, 0, 1)


def eulerian_params(a, b, c0, cinf) -> GkpParams:
    a, b = rat(a), rat(b)
    return GkpParams.of(-a, b, c0, a + b, -b, cinf)


def narayana_s(b, c0, cinf) -> GkpParams:
    b = rat(b)
    return GkpParams.of(b / 2, b, c0, -b, -b, cinf)


def narayana_rs(b, c0, cinf) -> GkpParams:
    b = rat(b)
    return GkpParams.of(-2 * b, b, c0, 3 * b / 2, -b, cinf)


def narayana_e(b, c0, cinf) -> GkpParams:
    b = rat(b)
    return GkpParams.of(b / 2, b, c0, 3 * b / 2, -b, cinf)


def sectan_s(b, c0, cinf) -> GkpParams:
    b = rat(b)
    return GkpParams.of(-b / 2, b, c0, b, -b, cinf)


def sectan_rs(b, c0, cinf) -> GkpParams:
    b = rat(b)
    return GkpParams.of(0, b, c0, b / 2, -b, cinf)


def sectan_e(b, c0, cinf) -> GkpParams:
    b = rat(b)
    return GkpParams.of(-b / 2, b, c0, b / 2, -b, cinf)


# name -> (argument names, constructor)
FAMILIES: dict[str, tuple[tuple[str, ...], Callable[..., GkpParams]]] = {
    "stirling": (("a", "b", "r"), stirling_params),
    "eulerian": (("a", "b", "c0", "cinf"), eulerian_params),
    "narayana-s": (("b", "c0", "cinf"), narayana_s),
    "narayana-rs": (("b", "c0", "cinf"), narayana_rs),
    "narayana-e": (("b", "c0", "cinf"), narayana_e),
    "sectan-s": (("b", "c0", "cinf"), sectan_s),
    "sectan-rs": (("b", "c0", "cinf"), sectan_rs),
    "sectan-e": (("b", "c0", "cinf"), sectan_e),
}

# parameterless classics, as (alpha, beta, gamma; alpha', beta', gamma')
CLASSICS: dict[str, tuple] = {
    "binomial": (0, 0, 1, 0, 0, 1),
    "stirling-subset": (0, 1, 0, 0, 0, 1),
    "stirling-cycle": (1, 0, 0, 0, 0, 1),
    "surjection": (0, 1, 0, 0, 1, 1),
    "eulerian-descent": (0, 1, 1, 1, -1, 0),
    "eulerian-shifted": (0, 1, 0, 1, -1, 1),
    "eulerian-symmetric": (0, 1, 1, 1, -1, 1),
    "left-peaks": (0, 2, 1, 1, -2, 0),
    "peaks": (0, 2, 2, 1, -2, 0),
}


def family_params(name: str, args=()) -> GkpParams:
    if name in CLASSICS:
        if args:
            raise ParameterError(f"family {name!r} takes no arguments")
        return GkpParams.of(*CLASSICS[name])
    if name not in FAMILIES:
        raise ParameterError(f"unknown family {name!r}")
    names, fn = FAMILIES[name]
    if len(args) != len(names):
        raise ParameterError(f"family {name!r} needs arguments {','.join(names)}")
    return fn(*args)


def family_triangle(name: str, args, N: int) -> Triangle:
    return triangle(family_params(name, args), N)


def stirling_rank1(a, b, r, n: int, k: int) -> Fraction:
    """``S_{n,k}(a,b;r)`` as a single alternating sum over j <= k."""
    a, b, r = rat(a), rat(b), rat(r)
    if b == 0:
        raise ParameterError("rank-one sum needs b != 0")
    if k < 0 or k > n:
        return Fraction(0)
    s = sum((-1) ** (k - j) * comb(k, j) * falling(b * j + r, n, a) for j in range(k + 1))
    return s / (b**k * factorial(k))


def eulerian_rank1(a, b, c0, cinf, n: int, k: int) -> Fraction:
    """``E_{n,k}(a,b;c0,cinf)`` as a single alternating sum over j <= k."""
    a, b, c0, cinf = rat(a), rat(b), rat(c0), rat(cinf)
    if b == 0:
        raise ParameterError("rank-one sum needs b != 0")
    if k < 0 or k > n:
        return Fraction(0)
    c = c0 + cinf
    s = sum(
        (-1) ** (k - j)
        * comb(k, j)
        * falling(b * n + c, k - j, b)
        * rising(c, j, b)
        * falling(b * j + c0, n, a)
        for j in range(k + 1)
    )
    return s / (b**k * factorial(k))


def stirling(a, b, r, N: int) -> Triangle:
    return triangle(stirling_params(a, b, r), N)


def eulerian(a, b, c0, cinf, N: int) -> Triangle:
    return triangle(eulerian_params(a, b, c0, cinf), N)
