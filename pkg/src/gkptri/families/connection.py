"""Connection matrices between falling-factorial bases, and the Jacobi
polynomial identities of the ``E(-2, 1; ., .)`` triangles."""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from ..algebra import Poly, rat
from ..core import GkpParams, trim
from ..report import Check
from .identities import E_entry, poly_falling
from .named import eulerian_params
from .riordan import Matrix, identity, matmul

F = Fraction


def connection_matrix(n: int, b) -> Matrix:
    """``A[k][j] = E_{n,j}(-1, b; b-k, k) / n!`` for 0 <= k, j <= n."""
    b = rat(b)
    return [[E_entry(-1, b, b - k, k, n, j) / factorial(n) for j in range(n + 1)] for k in range(n + 1)]


def expansion_check(n: int, b, r: int = 0) -> Check:
    """``Delta^r (bx+k)^{n falling} = sum_j A[k][j] n^{r falling} (x+j)^{(n-r) falling}``.

    The left side is differenced in x with unit step.
    """
    b = rat(b)
    A = connection_matrix(n, b)
    for k in range(n + 1):
        lhs = poly_falling(k, n, 1, b)
        for _ in range(r):
            lhs = lhs.compose(Poly([1, 1])) - lhs
        rhs = Poly([0])
        for j in range(n + 1):
            rhs = rhs + poly_falling(j, n - r) * (A[k][j] * _falling_int(n, r))
        if lhs != rhs:
            return Check(f"connection expansion n={n} b={b} r={r}", False, f"row k={k}")
    return Check(f"connection expansion n={n} b={b} r={r}", True)


def _falling_int(n: int, r: int) -> int:
    out = 1
    for i in range(r):
        out *= n - i
    return out


def charpoly(M: Matrix) -> Poly:
    """``det(xI - M)`` by the Faddeev-LeVerrier recursion."""
    n = len(M)
    coeffs = [F(0)] * (n + 1)
    coeffs[n] = F(1)
    Mk = [[F(0)] * n for _ in range(n)]
    I = [[F(int(i == j)) for j in range(n)] for i in range(n)]
    c = F(1)
    for k in range(1, n + 1):
        Mk = matmul(M, [[Mk[i][j] + c * I[i][j] for j in range(n)] for i in range(n)])
        c = -sum(Mk[i][i] for i in range(n)) / k
        coeffs[n - k] = c
    return Poly(coeffs)


def connection_matrix_checks(n: int, b) -> list[Check]:
    b = rat(b)
    A = connection_matrix(n, b)
    out = [expansion_check(n, b)]
    if b != 0:
        out.append(Check(f"A(n={n},{b}) A(n,{1 / b}) = I", matmul(A, connection_matrix(n, 1 / b)) == identity(n)))
    if b == 2:
        ok = all(A[k][j] == (comb(n + 1, 2 * j - k + 1) if 2 * j - k + 1 >= 0 else 0) for k in range(n + 1) for j in range(n + 1))
        out.append(Check(f"A(n={n},2) binomial form", ok))
    if b == 1:
        out.append(Check(f"A(n={n},1) = I", A == identity(n)))
    return out


def connection_matrix_eigencheck(n: int, b) -> Check:
    """Characteristic polynomial equals prod_{j<=n} (x - b^j)."""
    b = rat(b)
    want = Poly([1])
    for j in range(n + 1):
        want = want * Poly([-(b**j), 1])
    got = charpoly(connection_matrix(n, b))
    return Check(f"eigenvalues of A(n={n},{b}) are 1..b^n", got == want, got.to_str("x"))


# ---------------------------------------------------------------- Jacobi


def jacobi(n: int, A, B) -> Poly:
    """Finite-sum Jacobi polynomial with rational parameters."""
    from ..algebra import binom

    A, B = rat(A), rat(B)
    down = Poly([F(-1, 2), F(1, 2)])  # (t-1)/2
    up = Poly([F(1, 2), F(1, 2)])  # (t+1)/2
    out = Poly([0])
    for k in range(n + 1):
        out = out + down**k * up ** (n - k) * (binom(n + A, n - k) * binom(n + B, k))
    return out


def jacobi_recurrence_check(A, B, N: int = 8) -> Check:
    """The finite sum obeys the standard three-term recurrence in n."""
    A, B = rat(A), rat(B)
    s = A + B
    x = Poly([0, 1])
    if jacobi(0, A, B) != Poly([1]) or jacobi(1, A, B) != Poly([A + 1]) + (x - 1) * ((s + 2) / 2):
        return Check("Jacobi initial terms", False, f"A={A} B={B}")
    for n in range(2, N + 1):
        a1 = 2 * n * (n + s) * (2 * n + s - 2)
        if a1 == 0:
            continue
        lhs = jacobi(n, A, B) * a1
        rhs = (x * ((2 * n + s) * (2 * n + s - 2)) + (A * A - B * B)) * jacobi(n - 1, A, B) * (2 * n + s - 1) - jacobi(
            n - 2, A, B
        ) * (2 * (n + A - 1) * (n + B - 1) * (2 * n + s))
        if lhs != rhs:
            return Check("Jacobi three-term recurrence", False, f"A={A} B={B} n={n}")
    return Check("Jacobi three-term recurrence", True, f"A={A} B={B}")


def _neg_arg(p: Poly) -> Poly:
    return p.scale(-1)


def jacobi_identity_check(c0, N: int) -> list[Check]:
    """Both Jacobi forms of ``E(-2, 1; ., .)`` rows, and their trim link."""
    c0 = rat(c0)
    out = []
    ok2 = ok1 = True
    for n in range(N + 1):
        row = Poly([E_entry(-2, 1, c0, 0, n + 1, k) for k in range(n + 2)])
        want = _neg_arg(jacobi(n, c0 + n + 1, -c0 - n - 1)) * (c0 * factorial(n))
        if row != want:
            ok2 = False
        row1 = Poly([E_entry(-2, 1, c0 + 1, -1, n, k) for k in range(n + 1)])
        if row1 != _neg_arg(jacobi(n, c0 + n, -c0 - n)) * factorial(n):
            ok1 = False
    out.append(Check(f"E_(n+1)(-2,1;{c0},0) Jacobi form", ok2))
    out.append(Check(f"E_n(-2,1;{c0 + 1},-1) Jacobi form", ok1))
    if c0 != 0:
        new, trimmed = trim(eulerian_params(-2, 1, c0, 0), "right", N + 1)
        same = new == eulerian_params(-2, 1, c0 + 2, -1) and all(
            trimmed.rows[n][k] == E_entry(-2, 1, c0 + 2, -1, n, k) for n in range(N + 1) for k in range(n + 1)
        )
        out.append(Check("second Jacobi form is the right trim of the first", same))
    return out


def boros_moll(m: int) -> Poly:
    """``P_m(a) = 2^{-2m} sum_k 2^k C(2m-2k, m-k) C(m+k, m) (a+1)^k``."""
    out = Poly([0])
    for k in range(m + 1):
        out = out + Poly([1, 1]) ** k * F(2**k * comb(2 * m - 2 * k, m - k) * comb(m + k, m), 4**m)
    return out


def boros_moll_check(N: int) -> Check:
    """Rows of ``E(-2, 1; 3/2, -1)`` are ``n! P_n(-t)``."""
    for n in range(N + 1):
        row = Poly([E_entry(-2, 1, F(3, 2), -1, n, k) for k in range(n + 1)])
        if row != _neg_arg(boros_moll(n)) * factorial(n):
            return Check("Boros-Moll rows", False, f"n={n}")
    return Check("Boros-Moll rows", True, f"n<={N}")
