"""Exact arithmetic in the cyclotomic field Q(zeta_n).

Elements are stored reduced modulo the n-th cyclotomic polynomial in the
power basis 1, zeta, ..., zeta^(phi(n)-1). Internally a coefficient vector is
kept as integer numerators over one positive common denominator, normalized
so that the overall gcd is 1; this makes equality a tuple comparison.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exact import DensePoly, format_rational, poly_divrem, poly_ext_gcd

__all__ = [
    "CycField",
    "CycElem",
    "NotRationalError",
    "cyclotomic_polynomial",
    "get_field",
    "cyc_inverse",
    "cyc_conjugate",
    "unit_fraction",
    "cyc_to_complex",
    "rational_part",
]


class NotRationalError(ValueError):
    """Raised when a cyclotomic element expected to be rational is not."""

    def __init__(self, element: CycElem):
        super().__init__(f"not rational: {element!r}")
        self.element = element


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> DensePoly:
    """Phi_n as (x^n - 1) divided by Phi_d for every proper divisor d of n."""
    if n <= 0:
        raise ValueError("invalid order")
    p = DensePoly.monomial(n) - 1
    for d in range(1, n):
        if n % d == 0:
            q, r = poly_divrem(p, cyclotomic_polynomial(d))
            assert r.is_zero()
            p = q
    return p


def _normalize(num: list[int], den: int) -> tuple[tuple[int, ...], int]:
    if den < 0:
        num = [-c for c in num]
        den = -den
    g = den
    for c in num:
        if c:
            g = math.gcd(g, c)
            if g == 1:
                break
    if not any(num):
        return tuple([0] * len(num)), 1
    if g != 1:
        num = [c // g for c in num]
        den //= g
    return tuple(num), den


class CycField:
    """Q(zeta_n) for a fixed n >= 2, with Phi_n and the table u_1..u_{n-1}.

    Build instances through :func:`get_field` so each n is constructed once.
    """

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("field order must be >= 2")
        self.n = n
        self.phi_n = cyclotomic_polynomial(n)
        self.degree = self.phi_n.degree
        phi_int = [int(c) for c in self.phi_n.coeffs]
        d = self.degree
        # x^k mod Phi_n as integer vectors (Phi_n is monic with integer coefficients)
        top = max(n, 2 * d - 1)
        table: list[tuple[int, ...]] = []
        for k in range(top):
            if k < d:
                v = [0] * d
                v[k] = 1
            else:
                prev = table[k - 1]
                # x * prev, then replace x^d by -(phi_0 + ... + phi_{d-1} x^{d-1})
                carry = prev[-1]
                v = [0] + list(prev[:-1])
                if carry:
                    for i in range(d):
                        v[i] -= carry * phi_int[i]
            table.append(tuple(v))
        self._xpow = table
        self.zero = CycElem(self, (0,) * d, 1)
        self.one = self.from_rational(1)
        self.zeta = self._from_exponent_counts({1 % n: 1})
        self._u = tuple(self._unit_fraction_closed_form(r) for r in range(1, n))
        for r in range(1, n):
            if self._u[r - 1] * (1 - self.zeta_power(r)) != self.one:
                raise ArithmeticError(f"u_{r} cross-check failed for n={n}")
            if cyc_inverse(1 - self.zeta_power(r)) != self._u[r - 1]:
                raise ArithmeticError(f"u_{r} disagrees with ext-gcd inverse, n={n}")

    def __repr__(self) -> str:
        return f"CycField(n={self.n})"

    def __reduce__(self):
        return (get_field, (self.n,))

    def from_rational(self, q) -> CycElem:
        q = Fraction(q)
        num = [0] * self.degree
        num[0] = q.numerator
        return CycElem(self, tuple(num), q.denominator)

    def from_coeffs(self, coeffs: Sequence) -> CycElem:
        """Element from power-basis coefficients of any length (reduced mod Phi_n)."""
        fr = [Fraction(c) for c in coeffs]
        den = 1
        for c in fr:
            den = den * c.denominator // math.gcd(den, c.denominator)
        ints = [int(c * den) for c in fr]
        return CycElem(self, *self._reduce_ints(ints, den))

    def _reduce_ints(self, ints: Sequence[int], den: int) -> tuple[tuple[int, ...], int]:
        d = self.degree
        out = list(ints[:d]) + [0] * max(0, d - len(ints))
        for k in range(d, len(ints)):
            c = ints[k]
            if c:
                row = self._xpow_at(k)
                for i in range(d):
                    if row[i]:
                        out[i] += c * row[i]
        return _normalize(out, den)

    def _xpow_at(self, k: int) -> tuple[int, ...]:
        if k < len(self._xpow):
            return self._xpow[k]
        return self._xpow[k % self.n]

    def _from_exponent_counts(self, counts: dict[int, int], den: int = 1) -> CycElem:
        d = self.degree
        out = [0] * d
        for k, c in counts.items():
            row = self._xpow[k % self.n]
            for i in range(d):
                if row[i]:
                    out[i] += c * row[i]
        return CycElem(self, *_normalize(out, den))

    def zeta_power(self, k: int) -> CycElem:
        return self._from_exponent_counts({k % self.n: 1})

    def _unit_fraction_closed_form(self, r: int) -> CycElem:
        # 1/(1 - w) = -(1/n) * sum_{k=0}^{n-1} (k+1) w^k   for w^n = 1, w != 1
        n = self.n
        counts: dict[int, int] = {}
        for k in range(n):
            e = (r * k) % n
            counts[e] = counts.get(e, 0) + (k + 1)
        return self._from_exponent_counts(counts, -n)

    def u(self, r: int) -> CycElem:
        """u_r = 1/(1 - zeta_n^r)."""
        if r % self.n == 0:
            raise ZeroDivisionError("pole: 1-zeta^0 = 0")
        return self._u[r % self.n - 1]

    @property
    def u_table(self) -> tuple[CycElem, ...]:
        return self._u


@lru_cache(maxsize=None)
def get_field(n: int) -> CycField:
    return CycField(n)


class CycElem:
    """Immutable element of Q(zeta_n)."""

    __slots__ = ("field", "num", "den")

    def __init__(self, field: CycField, num: tuple[int, ...], den: int):
        self.field = field
        self.num = num
        self.den = den

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.num)

    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def _coerce(self, other) -> CycElem:
        if isinstance(other, CycElem):
            if other.field.n != self.field.n:
                raise ValueError("elements of different cyclotomic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        if not isinstance(other, CycElem):
            return NotImplemented
        return self.field.n == other.field.n and self.den == other.den and self.num == other.num

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(Fraction(self.num[0], self.den))
        return hash((self.field.n, self.num, self.den))

    def __repr__(self) -> str:
        cs = ", ".join(format_rational(c) for c in self.coeffs)
        return f"CycElem(n={self.field.n}, [{cs}])"

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.den, other.den
        if a == b:
            num = [x + y for x, y in zip(self.num, other.num)]
            return CycElem(self.field, *_normalize(num, a))
        num = [x * b + y * a for x, y in zip(self.num, other.num)]
        return CycElem(self.field, *_normalize(num, a * b))

    __radd__ = __add__

    def __neg__(self) -> CycElem:
        return CycElem(self.field, tuple(-c for c in self.num), self.den)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            num = [c * q.numerator for c in self.num]
            return CycElem(self.field, *_normalize(num, self.den * q.denominator))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.num, other.num
        d = len(a)
        if d == 1:
            return CycElem(self.field, *_normalize([a[0] * b[0]], self.den * other.den))
        prod = [0] * (2 * d - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    if bj:
                        prod[i + j] += ai * bj
        return CycElem(self.field, *self.field._reduce_ints(prod, self.den * other.den))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError("not invertible")
            return self * (1 / Fraction(other))
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * cyc_inverse(other)

    def __rtruediv__(self, other):
        return cyc_inverse(self) * other

    def __pow__(self, e: int) -> CycElem:
        if e < 0:
            return cyc_inverse(self) ** (-e)
        result, base = self.field.one, self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def conjugate(self) -> CycElem:
        return cyc_conjugate(self)

    def to_poly(self) -> DensePoly:
        return DensePoly(self.coeffs)

    def to_json(self) -> dict:
        return {"n": self.field.n, "coeffs": [format_rational(c) for c in self.coeffs]}

    def __complex__(self) -> complex:
        return cyc_to_complex(self)


def cyc_inverse(z: CycElem) -> CycElem:
    """Multiplicative inverse via the extended gcd of rep(z) and Phi_n."""
    if z.is_zero():
        raise ZeroDivisionError("not invertible")
    field = z.field
    if z.is_rational():
        return field.from_rational(1 / Fraction(z.num[0], z.den))
    g, u, _ = poly_ext_gcd(z.to_poly(), field.phi_n)
    assert g.degree == 0
    return field.from_coeffs(u.coeffs)


def cyc_conjugate(z: CycElem) -> CycElem:
    """Complex conjugation, i.e. the automorphism zeta -> zeta^(n-1)."""
    field = z.field
    n = field.n
    counts: dict[int, int] = {}
    for k, c in enumerate(z.num):
        if c:
            e = (-k) % n
            counts[e] = counts.get(e, 0) + c
    return field._from_exponent_counts(counts, z.den)


def unit_fraction(field: CycField, r: int) -> CycElem:
    return field.u(r)


def cyc_to_complex(z: CycElem) -> complex:
    """Float embedding at zeta_n = exp(2*pi*i/n). Advisory only."""
    w = cmath.exp(2j * math.pi / z.field.n)
    acc = 0j
    for c in reversed(z.num):
        acc = acc * w + c
    return acc / z.den


def rational_part(z: CycElem) -> Fraction:
    if not z.is_rational():
        raise NotRationalError(z)
    return Fraction(z.num[0], z.den)
