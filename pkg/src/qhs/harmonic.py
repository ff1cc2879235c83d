"""Finite q-multiple harmonic sums and the pattern sums built from them.

The central object is

    Z_n(q; s_1, ..., s_m) = sum_{1 <= i_1 < ... < i_m <= n-1}
                            prod_k 1 / (1 - q^{i_k})^{s_k}

evaluated exactly, either at q = zeta_n (values in Q(zeta_n)) or at a
rational q (values in Q). :func:`zq_dp` is the ground truth for everything in
:mod:`qhs.closed_forms`; :func:`zq_bruteforce` is its enumeration oracle.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .cyclotomic import CycElem, CycField, cyc_conjugate, get_field, rational_part
from .sequences import binomial

__all__ = [
    "QSpec",
    "BruteForceCapError",
    "DEFAULT_BRUTE_CAP",
    "validate_indices",
    "zq_bruteforce",
    "zq_dp",
    "elem_sym_power",
    "pattern_ones",
    "pattern_twos",
    "pattern_sum_ones",
    "cyclic_sum_ones",
    "average_ones",
    "pattern_sum_twos",
    "cyclic_sum_twos",
    "RecurrenceCheck",
    "recurrence_check_eap",
    "recurrence_check_22",
]

Value = Union[CycElem, Fraction]

DEFAULT_BRUTE_CAP = 200_000


class BruteForceCapError(RuntimeError):
    """The enumeration would visit more tuples than the configured cap."""


@dataclass(frozen=True)
class QSpec:
    """Where the sum is evaluated.

    Root mode uses q = zeta_n; rational mode uses a rational q with indices
    running over 1..n-1 just the same.
    """

    n: int
    q: Fraction | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("n must be >= 1")
        if self.q is None:
            if self.n < 2:
                raise ValueError("root-of-unity mode needs n >= 2")
        else:
            q = Fraction(self.q)
            object.__setattr__(self, "q", q)
            for i in range(1, self.n):
                if q**i == 1:
                    raise ValueError(f"q^{i} = 1 makes the sum singular")

    @classmethod
    def root(cls, n: int) -> QSpec:
        return cls(n)

    @classmethod
    def rational(cls, q, n: int) -> QSpec:
        return cls(n, Fraction(q))

    @property
    def is_root(self) -> bool:
        return self.q is None

    @property
    def field(self) -> CycField:
        if not self.is_root:
            raise ValueError("rational-q mode has no cyclotomic field")
        return get_field(self.n)

    def one(self) -> Value:
        return self.field.one if self.is_root else Fraction(1)

    def zero(self) -> Value:
        return self.field.zero if self.is_root else Fraction(0)

    def weight(self, i: int, s: int) -> Value:
        """1/(1 - q^i)^s, memoized per (i, s)."""
        return _weight(self, i, s)


_weights: dict[tuple[QSpec, int, int], Value] = {}


def _weight(spec: QSpec, i: int, s: int) -> Value:
    key = (spec, i, s)
    w = _weights.get(key)
    if w is None:
        if spec.is_root:
            w = spec.field.u(i) ** s
        else:
            w = 1 / (1 - spec.q**i) ** s
        _weights[key] = w
    return w


def _as_spec(spec: QSpec | int) -> QSpec:
    return QSpec.root(spec) if isinstance(spec, int) else spec


def validate_indices(s: Sequence[int]) -> tuple[int, ...]:
    s = tuple(int(x) for x in s)
    for x in s:
        if x < 1:
            raise ValueError(f"index entries must be >= 1, got {x}")
    return s


def zq_bruteforce(spec: QSpec | int, s: Sequence[int], cap: int = DEFAULT_BRUTE_CAP) -> Value:
    """Direct enumeration over all increasing index tuples."""
    spec = _as_spec(spec)
    s = validate_indices(s)
    n, m = spec.n, len(s)
    count = binomial(n - 1, m) if n >= 1 else 0
    if count > cap:
        raise BruteForceCapError(f"{count} tuples exceeds cap {cap}; use DP")
    total = spec.zero()
    for idx in itertools.combinations(range(1, n), m):
        term = spec.one()
        for i, e in zip(idx, s):
            term = term * spec.weight(i, e)
        total = total + term
    return total


def zq_dp(spec: QSpec | int, s: Sequence[int]) -> Value:
    """O(n*m) evaluation.

    T[k] holds the sum over i_1 < ... < i_k <= i of the first k factors.
    Updating k from m down to 1 means T[k-1] still excludes index i when it is
    used, which is what keeps the indices strictly increasing.
    """
    spec = _as_spec(spec)
    s = validate_indices(s)
    m = len(s)
    T = [spec.one()] + [spec.zero()] * m
    for i in range(1, spec.n):
        for k in range(min(m, i), 0, -1):
            prev = T[k - 1]
            if prev != 0:
                T[k] = T[k] + prev * spec.weight(i, s[k - 1])
    return T[m]


def elem_sym_power(spec: QSpec | int, A: int, k: int) -> Fraction:
    """e_k(u_1^A, ..., u_{n-1}^A) as an exact rational."""
    spec = _as_spec(spec)
    if not spec.is_root:
        raise ValueError("elem_sym_power is defined at q = zeta_n only")
    if A < 1 or k < 0:
        raise ValueError("need A >= 1 and k >= 0")
    return _elem_sym_cached(spec.n, A, k)


_esym: dict[tuple[int, int, int], Fraction] = {}


def _elem_sym_cached(n: int, A: int, k: int) -> Fraction:
    key = (n, A, k)
    v = _esym.get(key)
    if v is None:
        if k == 0:
            v = Fraction(1)
        elif k > n - 1:
            v = Fraction(0)
        else:
            v = rational_part(zq_dp(QSpec.root(n), (A,) * k))
        _esym[key] = v
    return v


def pattern_ones(A: int, m: int, j: int) -> tuple[int, ...]:
    """The index vector 1^(j-1), A, 1^(m-j)."""
    return _pattern(1, A, m, j)


def pattern_twos(A: int, m: int, j: int) -> tuple[int, ...]:
    """The index vector 2^(j-1), A, 2^(m-j)."""
    return _pattern(2, A, m, j)


def _pattern(base: int, A: int, m: int, j: int) -> tuple[int, ...]:
    if not 1 <= j <= m:
        raise ValueError(f"slot j={j} outside 1..{m}")
    if A < 1:
        raise ValueError("A must be >= 1")
    return (base,) * (j - 1) + (A,) + (base,) * (m - j)


def pattern_sum_ones(n: int, A: int, m: int, j: int) -> CycElem:
    return zq_dp(QSpec.root(n), pattern_ones(A, m, j))


def cyclic_sum_ones(n: int, A: int, m: int) -> Fraction:
    """F_m^(A)(n): the sum over j of P_m^(A,j)(n); rational by conjugate pairing."""
    if m < 1:
        raise ValueError("m must be >= 1")
    total = get_field(n).zero
    for j in range(1, m + 1):
        total = total + pattern_sum_ones(n, A, m, j)
    return rational_part(total)


def average_ones(n: int, A: int, m: int) -> Fraction:
    """Q_m^(A)(n) = F_m^(A)(n) / m."""
    return cyclic_sum_ones(n, A, m) / m


def pattern_sum_twos(n: int, A: int, m: int, j: int) -> CycElem:
    return zq_dp(QSpec.root(n), pattern_twos(A, m, j))


def cyclic_sum_twos(n: int, A: int, m: int) -> Fraction:
    """The sum over j of R_m^(A,j)(n)."""
    if m < 1:
        raise ValueError("m must be >= 1")
    total = get_field(n).zero
    for j in range(1, m + 1):
        total = total + pattern_sum_twos(n, A, m, j)
    return rational_part(total)


@dataclass(frozen=True)
class RecurrenceCheck:
    holds: bool
    lhs: Fraction
    rhs: Fraction

    def __bool__(self) -> bool:
        return self.holds


def recurrence_check_eap(n: int, A: int, m: int) -> RecurrenceCheck:
    """e_1^(A-1) e_m = F_{m+1}^(A-1) + F_m^(A)."""
    if A < 2 or m < 1:
        raise ValueError("need A >= 2 and m >= 1")
    lhs = elem_sym_power(n, A - 1, 1) * elem_sym_power(n, 1, m)
    rhs = cyclic_sum_ones(n, A - 1, m + 1) + cyclic_sum_ones(n, A, m)
    return RecurrenceCheck(lhs == rhs, lhs, rhs)


def recurrence_check_22(n: int, A: int, m: int) -> RecurrenceCheck:
    """e_1^(A-1) e_m^(2) = R_{m+1}^(A-1) + R_m^(A+1), R being the cyclic 2-pattern sum."""
    if A < 2 or m < 1:
        raise ValueError("need A >= 2 and m >= 1")
    lhs = elem_sym_power(n, A - 1, 1) * elem_sym_power(n, 2, m)
    rhs = cyclic_sum_twos(n, A - 1, m + 1) + cyclic_sum_twos(n, A + 1, m)
    return RecurrenceCheck(lhs == rhs, lhs, rhs)


def conjugate_value(z: Value) -> Value:
    return z if isinstance(z, Fraction) else cyc_conjugate(z)
