"""Stirling, Bernoulli, Cauchy and degenerate Bernoulli numbers.

Degenerate Bernoulli numbers are available through two independent routes:
Howard's closed form (:func:`degenerate_bernoulli`) and coefficient extraction
from the Carlitz generating function (:func:`degenerate_bernoulli_series`).
The two must agree exactly; the test-suite enforces it.

Bernoulli numbers use the B_1 = -1/2 convention. Only even-index values feed
Howard's formula, so the choice does not matter downstream.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from functools import lru_cache

from .exact import TruncatedSeries, series_reciprocal

__all__ = [
    "binomial",
    "stirling1_unsigned",
    "bernoulli_number",
    "cauchy_number",
    "cauchy_number_series",
    "degenerate_bernoulli",
    "degenerate_bernoulli_series",
    "degenerate_bernoulli_polynomial",
]

_lock = threading.Lock()
_stirling_rows: list[list[int]] = [[1]]
_bernoulli: list[Fraction] = [Fraction(1)]


def binomial(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n. Negative n is rejected."""
    if n < 0:
        raise ValueError("negative upper index")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def stirling1_unsigned(n: int, k: int) -> int:
    """Unsigned Stirling number of the first kind [n, k]."""
    if n < 0 or k < 0:
        raise ValueError("Stirling numbers need non-negative arguments")
    if k > n:
        return 0
    with _lock:
        while len(_stirling_rows) <= n:
            m = len(_stirling_rows)
            prev = _stirling_rows[-1]
            row = [0] * (m + 1)
            for j in range(1, m + 1):
                row[j] = prev[j - 1] + (m - 1) * (prev[j] if j < m else 0)
            _stirling_rows.append(row)
        return _stirling_rows[n][k]


def bernoulli_number(k: int) -> Fraction:
    """B_k from sum_{j=0}^{m} C(m+1, j) B_j = 0 (m >= 1)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    with _lock:
        while len(_bernoulli) <= k:
            m = len(_bernoulli)
            acc = sum((math.comb(m + 1, j) * b for j, b in enumerate(_bernoulli)), Fraction(0))
            _bernoulli.append(-acc / (m + 1))
        return _bernoulli[k]


@lru_cache(maxsize=None)
def cauchy_number(k: int) -> Fraction:
    """C_k = sum_j [k, j] (-1)^(k-j) / (j+1)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k == 0:
        return Fraction(1)
    return sum(
        (Fraction((-1) ** (k - j) * stirling1_unsigned(k, j), j + 1) for j in range(k + 1)),
        Fraction(0),
    )


def cauchy_number_series(k: int) -> Fraction:
    """C_k read off the Taylor series of t/log(1+t); cross-check for :func:`cauchy_number`."""
    L = k + 1
    log_over_t = TruncatedSeries([Fraction((-1) ** i, i + 1) for i in range(L)], L)
    return series_reciprocal(log_over_t)[k] * math.factorial(k)


@lru_cache(maxsize=None)
def degenerate_bernoulli(m: int, lam: Fraction) -> Fraction:
    """beta_m(lambda) by Howard's closed form.

    beta_m = C_m lam^m + sum_{j=1}^{m//2} (m/(2j)) B_{2j} [m-1, 2j-1] (-lam)^(m-2j)
    for m >= 2, with beta_0 = 1 and beta_1 = -1/2 + lam/2.
    """
    lam = Fraction(lam)
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return Fraction(1)
    if m == 1:
        return Fraction(-1, 2) + lam / 2
    total = cauchy_number(m) * lam**m
    for j in range(1, m // 2 + 1):
        total += (
            Fraction(m, 2 * j)
            * bernoulli_number(2 * j)
            * stirling1_unsigned(m - 1, 2 * j - 1)
            * (-lam) ** (m - 2 * j)
        )
    return total


def _falling_series(x: Fraction, lam: Fraction, L: int) -> TruncatedSeries:
    # (1 + lam t)^(x/lam) = sum_k prod_{i<k}(x - i lam) t^k / k!
    coeffs = []
    c = Fraction(1)
    for k in range(L):
        coeffs.append(c)
        c = c * (x - k * lam) / (k + 1)
    return TruncatedSeries(coeffs, L)


def _exp_series(L: int) -> TruncatedSeries:
    return TruncatedSeries([Fraction(1, math.factorial(k)) for k in range(L)], L)


@lru_cache(maxsize=None)
def _degenerate_bernoulli_egf(L: int, lam: Fraction) -> TruncatedSeries:
    """Series of t / ((1 + lam t)^(1/lam) - 1) through order L-1."""
    # one extra order is consumed by dividing out the factor t
    base = _exp_series(L + 1) if lam == 0 else _falling_series(Fraction(1), lam, L + 1)
    denom = (base - 1).shift_down()
    return series_reciprocal(denom)


def degenerate_bernoulli_series(m: int, lam: Fraction) -> Fraction:
    """beta_m(lambda) extracted from the generating function; lambda = 0 gives B_m."""
    if m < 0:
        raise ValueError("m must be >= 0")
    lam = Fraction(lam)
    egf = _degenerate_bernoulli_egf(m + 1, lam)
    return egf[m] * math.factorial(m)


@lru_cache(maxsize=None)
def degenerate_bernoulli_polynomial(k: int, x: Fraction, lam: Fraction) -> Fraction:
    """beta_k(x | lambda) from t (1+lam t)^(x/lam) / ((1+lam t)^(1/lam) - 1)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    x, lam = Fraction(x), Fraction(lam)
    if lam == 0:
        raise ValueError("use classical Bernoulli polynomial path")
    L = k + 1
    series = _degenerate_bernoulli_egf(L, lam) * _falling_series(x, lam, L)
    return series[k] * math.factorial(k)
