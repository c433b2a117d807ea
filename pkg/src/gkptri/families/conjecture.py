"""Conjectured Bessel-sum formula for ``E_{n,k}(-1, 2; c+2p+zeta, 2p+zeta)``.

The formula is unproved, so a mismatch is reported as a finding rather
than raised. The left side comes from the recurrence, the right side
from the r-Bessel closed forms in the registry.
"""
from __future__ import annotations

from fractions import Fraction

from ..algebra import rat, rising
from ..report import Check
from .closed_forms import closed_form_eval
from .identities import E_entry


def conjecture_lhs(p: int, zeta: int, c, n: int, k: int) -> Fraction:
    c = rat(c)
    return E_entry(-1, 2, c + 2 * p + zeta, 2 * p + zeta, n, k)


def conjecture_rhs(p: int, zeta: int, c, n: int, k: int) -> Fraction:
    c = rat(c)
    m = 2 * p + zeta
    pre = rising(c + m, n) / rising(c + 2 * p + 2 * zeta, p, 2)
    total = Fraction(0)
    for l in range(p + 1):
        bessel = closed_form_eval("bessel_rank0", "B", m, m - l, r=0)
        rbessel = closed_form_eval("bessel_r_altgen", "first", n, n - k, r=m - 2 * l)
        total += rising(c + 1, p, 2) / rising(c + 1, k + l, 2) * bessel * rbessel
    return pre * total


def conjecture_check(p: int, zeta: int, c, N: int) -> Check:
    """Compare both sides for all 0 <= k <= n <= N."""
    if zeta not in (0, 1) or p < 0:
        raise ValueError("need natural p and zeta in {0,1}")
    name = f"conjecture p={p} zeta={zeta} c={rat(c)}"
    for n in range(N + 1):
        for k in range(n + 1):
            lhs, rhs = conjecture_lhs(p, zeta, c, n, k), conjecture_rhs(p, zeta, c, n, k)
            if lhs != rhs:
                return Check(name, False, f"n={n} k={k}: recurrence {lhs}, formula {rhs}", finding=True)
    return Check(name, True, f"n<={N}", finding=True)


def conjecture_scan(ps=(0, 1, 2), zetas=(0, 1), cs=(1, Fraction(3, 2), 2), N: int = 8) -> list[Check]:
    return [conjecture_check(p, z, c, N) for p in ps for z in zetas for c in cs]
