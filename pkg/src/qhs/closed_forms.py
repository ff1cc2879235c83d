"""Closed-form expressions for the harmonic sums, evaluated exactly.

Everything here is a claim to be checked against :func:`qhs.harmonic.zq_dp`;
none of it is used as ground truth.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .exact import DensePoly, TruncatedSeries
from .sequences import (
    binomial,
    degenerate_bernoulli,
    degenerate_bernoulli_polynomial,
)

__all__ = [
    "ones_em_formula",
    "zeta_single_table",
    "TABLE_RANGE",
    "hessenberg_matrix",
    "hessenberg_det",
    "bareiss_det",
    "zeta_single_determinant",
    "zeta_single_degber",
    "zeta_single_degberpoly",
    "genfunc_coeffs",
    "theorem1_formula",
    "theorem2_formula",
    "em2_formula",
    "r1_sum_formula",
    "theorem4_formula",
    "bik_pair_formula",
]

F = Fraction


def _c(n: int, k: int) -> int:
    return binomial(n, k)


def ones_em_formula(n: int, m: int) -> Fraction:
    """e_m = Z_n(zeta_n; 1,...,1) = C(n-1, m)/(m+1)."""
    return F(_c(n - 1, m), m + 1)


def _table_value(n: int, s: int) -> Fraction:
    if s == 1:
        return F(n - 1, 2)
    if s == 2:
        return -F((n - 1) * (n - 5), 12)
    if s == 3:
        return -F((n - 1) * (n - 3), 8)
    if s == 4:
        return F((n - 1) * (n**3 + n**2 - 109 * n + 251), math.factorial(6))
    if s == 5:
        return F((n - 1) * (n - 5) * (n**2 + 6 * n - 19), 288)
    if s == 6:
        poly = 2 * n**5 + 2 * n**4 - 355 * n**3 - 355 * n**2 + 11153 * n - 19087
        return -F((n - 1) * poly, 12 * math.factorial(7))
    if s == 7:
        poly = 2 * n**4 + 16 * n**3 - 33 * n**2 - 376 * n + 751
        return -F((n - 1) * (n - 7) * poly, 24 * math.factorial(6))
    if s == 8:
        poly = (
            3 * n**7 + 3 * n**6 - 917 * n**5 - 917 * n**4
            + 39697 * n**3 + 39697 * n**2 - 744383 * n + 1070017
        )
        return F((n - 1) * poly, math.factorial(10))
    poly = n**5 + 13 * n**4 + 10 * n**3 - 350 * n**2 - 851 * n + 2857
    return F(27 * (n - 1) * (n - 3) * (n - 9) * poly, 2 * math.factorial(10))


TABLE_RANGE = range(1, 10)


def zeta_single_table(n: int, s: int) -> Fraction:
    """The tabulated polynomial in n for Z_n(zeta_n; s), 1 <= s <= 9."""
    if s not in TABLE_RANGE:
        raise ValueError("not tabulated")
    return _table_value(n, s)


def hessenberg_matrix(n: int, s: int) -> list[list[Fraction]]:
    """The s x s lower-Hessenberg matrix whose determinant is Z_n(zeta_n; s).

    Rows and columns are 1-based in the formulas:
    a[i][1] = i/(i+1) C(n-1, i); a[i][j] = C(n-1, i-j+1)/(i-j+2) for
    2 <= j <= i+1 (so the superdiagonal is all ones); zero above that.
    """
    M = [[F(0)] * s for _ in range(s)]
    for i in range(1, s + 1):
        M[i - 1][0] = F(i * _c(n - 1, i), i + 1)
        for j in range(2, min(i + 1, s) + 1):
            M[i - 1][j - 1] = F(_c(n - 1, i - j + 1), i - j + 2)
    return M


def hessenberg_det(M: list[list[Fraction]]) -> Fraction:
    """Determinant of a lower-Hessenberg matrix by the last-row expansion.

    D_k = sum_{i=1}^{k} (-1)^(k-i) a_{k,i} (prod_{l=i}^{k-1} a_{l,l+1}) D_{i-1}.
    """
    s = len(M)
    D = [F(1)]
    for k in range(1, s + 1):
        total = F(0)
        sup = F(1)
        for i in range(k, 0, -1):
            if i < k:
                sup *= M[i - 1][i]
            term = M[k - 1][i - 1] * sup * D[i - 1]
            total += term if (k - i) % 2 == 0 else -term
        D.append(total)
    return D[s]


def bareiss_det(M: list[list[Fraction]]) -> Fraction:
    """Determinant by fraction-free (Bareiss) elimination after clearing denominators."""
    s = len(M)
    if s == 0:
        return F(1)
    scale = F(1)
    A: list[list[int]] = []
    for row in M:
        den = 1
        for x in row:
            den = math.lcm(den, F(x).denominator)
        A.append([int(F(x) * den) for x in row])
        scale *= den
    sign = 1
    prev = 1
    for k in range(s - 1):
        if A[k][k] == 0:
            for r in range(k + 1, s):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return F(0)
        for i in range(k + 1, s):
            for j in range(k + 1, s):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return F(sign * A[s - 1][s - 1]) / scale


def zeta_single_determinant(n: int, s: int, cross_check: bool = True) -> Fraction:
    if n < 2 or s < 1:
        raise ValueError("need n >= 2 and s >= 1")
    M = hessenberg_matrix(n, s)
    det = hessenberg_det(M)
    if cross_check and bareiss_det(M) != det:
        raise ArithmeticError(f"Hessenberg recurrence disagrees with Bareiss at n={n}, s={s}")
    return det


def zeta_single_degber(n: int, s: int) -> Fraction:
    """-sum_{j=1}^{s} C(s-1, j-1) beta_j(1/n) n^j / j!."""
    if n < 2 or s < 1:
        raise ValueError("need n >= 2 and s >= 1")
    lam = F(1, n)
    return -sum(
        (_c(s - 1, j - 1) * degenerate_bernoulli(j, lam) * F(n**j, math.factorial(j))
         for j in range(1, s + 1)),
        F(0),
    )


def zeta_single_degberpoly(n: int, s: int) -> Fraction:
    """(-1)^s n^(s+1)/(s+1)! * (beta_{s+1}((n-1)/n | 1/n) - beta_{s+1}(0 | 1/n))."""
    if n < 2 or s < 1:
        raise ValueError("need n >= 2 and s >= 1")
    lam = F(1, n)
    diff = (degenerate_bernoulli_polynomial(s + 1, F(n - 1, n), lam)
            - degenerate_bernoulli_polynomial(s + 1, F(0), lam))
    return (-1) ** s * F(n ** (s + 1), math.factorial(s + 1)) * diff


def genfunc_coeffs(n: int, S: int) -> list[Fraction]:
    """Coefficients 0..S of n(1 - (1-x)^(n-1)) / (1 - (1-x)^n).

    Numerator and denominator both vanish at x = 0; the common factor x is
    divided out before inverting the denominator.
    """
    if n < 2 or S < 0:
        raise ValueError("need n >= 2 and S >= 0")
    L = S + 2
    y = DensePoly((1, -1))
    num = TruncatedSeries.from_poly(1 - y ** (n - 1), L).shift_down()
    den = TruncatedSeries.from_poly(1 - y**n, L).shift_down()
    return list((num / den * n).coeffs)


def theorem1_formula(n: int, A: int, m: int) -> Fraction:
    """Polynomial closed forms of F_m^(A)(n) for A = 2, 3, 4, 5."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    c = lambda k: _c(n - 1, k)  # noqa: E731
    if A == 2:
        return -F(m * (n - 2 * m - 3), 2 * (m + 1) * (m + 2)) * c(m)
    if A == 3:
        inner = -F((n - 1) * (n - 5), 12) + F(
            (m + 1) * (n - 2 * m - 5) * (n - m - 1), 2 * (m + 2) * (m + 3)
        )
        return F(c(m), m + 1) * inner
    if A == 4:
        return (
            -F((n - 1) * (n - 3), 8 * (m + 1)) * c(m)
            + F((n - 1) * (n - 5), 12 * (m + 2)) * c(m + 1)
            - F((m + 2) * (n - 2 * m - 7), 2 * (m + 3) * (m + 4)) * c(m + 2)
        )
    if A == 5:
        return (
            F((n - 1) * (n**3 + n**2 - 109 * n + 251), math.factorial(6) * (m + 1)) * c(m)
            + F((n - 1) * (n - 3), 8 * (m + 2)) * c(m + 1)
            - F((n - 1) * (n - 5), 12 * (m + 3)) * c(m + 2)
            + F((m + 3) * (n - 2 * m - 9), 2 * (m + 4) * (m + 5)) * c(m + 3)
        )
    raise ValueError("use theorem2_formula")


def theorem2_formula(n: int, A: int, m: int) -> Fraction:
    """F_m^(A)(n) for any A >= 2 through degenerate Bernoulli numbers.

    The k-sum is empty for A = 2, leaving only the tail term.
    """
    if A < 2 or n < 2 or m < 1:
        raise ValueError("need A >= 2, n >= 2, m >= 1")
    lam = F(1, n)
    total = F(0)
    for k in range(0, A - 2):
        for j in range(1, A - k):
            total += (
                F((-1) ** (k + 1) * n**j, (m + k + 1) * math.factorial(j))
                * degenerate_bernoulli(j, lam)
                * _c(n - 1, m + k)
                * _c(A - k - 2, j - 1)
            )
    tail = F((m + A - 2) * (n - 2 * m - 2 * A + 1), 2 * (m + A - 1) * (m + A)) * _c(n - 1, m + A - 2)
    return total + (-1) ** (A + 1) * tail


def em2_formula(n: int, m: int) -> Fraction:
    """e_m^(2) = (C(n-1, m) + (-1)^m C(n-1, 2m+1)) / (n(m+1))."""
    if n < 2 or m < 0:
        raise ValueError("need n >= 2 and m >= 0")
    return F(_c(n - 1, m) + (-1) ** m * _c(n - 1, 2 * m + 1), n * (m + 1))


def r1_sum_formula(n: int, m: int) -> Fraction:
    """Sum over j of the 2...2,1,2...2 pattern: (C(n-1, m) + (-1)^(m-1) C(n-1, 2m)) / n."""
    if n < 2 or m < 1:
        raise ValueError("need n >= 2 and m >= 1")
    return F(_c(n - 1, m) + (-1) ** (m - 1) * _c(n - 1, 2 * m), n)


def _alt_pair(n: int, a: int, sign_exp: int, b: int) -> int:
    # C(n-1, a) + (-1)^sign_exp C(n-1, b)
    return _c(n - 1, a) + (-1) ** sign_exp * _c(n - 1, b)


def theorem4_formula(n: int, A: int, m: int) -> Fraction:
    """Sum over j of the 2...2,A,2...2 pattern sums, both parities of A."""
    if A < 1 or n < 2 or m < 1:
        raise ValueError("need A >= 1, n >= 2, m >= 1")
    lam = F(1, n)
    k_max = A // 2 - 2 if A % 2 == 0 else (A - 3) // 2
    total = F(0)
    for k in range(0, k_max + 1):
        pair = _alt_pair(n, m + k, m + k, 2 * m + 2 * k + 1)
        if pair == 0:
            continue
        for j in range(1, A - 2 * k - 1):
            total += (
                F((-1) ** (k + 1) * n**j, n * (m + k + 1) * math.factorial(j))
                * degenerate_bernoulli(j, lam)
                * _c(A - 2 * k - 3, j - 1)
                * pair
            )
    if A % 2 == 0:
        h = A // 2
        tail = F(m + h - 1, n * (m + h)) * _alt_pair(n, m + h - 1, m + h - 1, 2 * m + A - 1)
        return total + (-1) ** (h - 1) * tail
    h = (A - 1) // 2
    tail = F(_alt_pair(n, m + h, m + (A - 3) // 2, 2 * m + A - 1), n)
    return total + (-1) ** h * tail


def bik_pair_formula(n: int, m: int) -> Fraction:
    """Real part of any single 1...1,2,1...1 pattern sum: -m!(n-2m-3)/(2(m+2)!) C(n-1, m)."""
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    return -F(math.factorial(m) * (n - 2 * m - 3), 2 * math.factorial(m + 2)) * _c(n - 1, m)
