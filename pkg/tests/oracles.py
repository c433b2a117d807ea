"""Brute-force reference values that share no code with the package.

Counts come from explicit enumeration with itertools; the generic
triangle oracle is a memoized recursion written straight from the
recurrence.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product


def descents_row(n: int) -> list[int]:
    """Number of permutations of 1..n with k descents, k = 0..n."""
    c = Counter()
    for p in permutations(range(n)):
        c[sum(p[i] > p[i + 1] for i in range(n - 1))] += 1
    return [c[k] for k in range(n + 1)]


def set_partitions(elems: list):
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for part in set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


def set_partitions_row(n: int) -> list[int]:
    c = Counter(len(p) for p in set_partitions(list(range(n))))
    return [c[k] for k in range(n + 1)]


def surjections_row(n: int) -> list[int]:
    """Maps from an n-set onto a k-set, k = 0..n."""
    out = []
    for k in range(n + 1):
        if k == 0:
            out.append(1 if n == 0 else 0)
            continue
        out.append(sum(1 for f in product(range(k), repeat=n) if len(set(f)) == k))
    return out


def left_peaks_row(n: int) -> list[int]:
    """Permutations by number of left peaks: i with w(i-1) < w(i) > w(i+1), w(0) = 0."""
    c = Counter()
    for p in permutations(range(1, n + 1)):
        w = (0,) + p
        c[sum(w[i - 1] < w[i] > w[i + 1] for i in range(1, n))] += 1
    return [c[k] for k in range(n + 1)]


def naive_triangle(params, N: int) -> list[list[Fraction]]:
    a, b, g, ap, bp, gp = (Fraction(x) for x in params)

    @lru_cache(maxsize=None)
    def T(n, k):
        if n == 0:
            return Fraction(int(k == 0))
        if k < 0 or k > n:
            return Fraction(0)
        m = n - 1
        return (a * m + b * k + g) * T(m, k) + (ap * m + bp * (k - 1) + gp) * T(m, k - 1)

    return [[T(n, k) for k in range(n + 1)] for n in range(N + 1)]
