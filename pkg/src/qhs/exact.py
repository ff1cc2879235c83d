"""Exact substrate: rationals, dense univariate polynomials and truncated series.

Rationals are plain :class:`fractions.Fraction` values. They cross module and
file boundaries as the strings ``"p/q"`` (or ``"p"`` when ``q == 1``).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "DensePoly",
    "TruncatedSeries",
    "poly_divrem",
    "poly_ext_gcd",
    "series_reciprocal",
    "format_rational",
    "parse_rational",
]


def format_rational(q: Scalar) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``; surrounding whitespace is ignored."""
    return Fraction(text.strip())


def _trim(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class DensePoly:
    """Polynomial over Q; ``coeffs[i]`` is the coefficient of x**i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        self.coeffs = _trim(coeffs)

    @classmethod
    def x(cls) -> DensePoly:
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Scalar) -> DensePoly:
        return cls((c,))

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> DensePoly:
        return cls([0] * degree + [c])

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def monic(self) -> DensePoly:
        if self.is_zero():
            return self
        lc = self.leading
        return DensePoly(c / lc for c in self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = DensePoly.constant(other)
        if not isinstance(other, DensePoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"DensePoly({[format_rational(c) for c in self.coeffs]})"

    def _coerce(self, other) -> DensePoly:
        if isinstance(other, DensePoly):
            return other
        if isinstance(other, (int, Fraction)):
            return DensePoly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return DensePoly([c + (b[i] if i < len(b) else 0) for i, c in enumerate(a)])

    __radd__ = __add__

    def __neg__(self) -> DensePoly:
        return DensePoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return DensePoly()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    out[i + j] += ai * bj
        return DensePoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> DensePoly:
        if e < 0:
            raise ValueError("negative exponent")
        result, base = DensePoly.constant(1), self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __divmod__(self, other):
        return poly_divrem(self, self._coerce(other))


def poly_divrem(a: DensePoly, b: DensePoly) -> tuple[DensePoly, DensePoly]:
    """Euclidean division ``a = b*q + r`` with ``deg r < deg b``."""
    if b.is_zero():
        raise ZeroDivisionError("zero divisor")
    rem = list(a.coeffs)
    db = b.degree
    if len(rem) - 1 < db:
        return DensePoly(), a
    lc = b.leading
    quot = [Fraction(0)] * (len(rem) - db)
    for k in range(len(rem) - 1, db - 1, -1):
        c = rem[k] / lc
        if c:
            quot[k - db] = c
            for i, bi in enumerate(b.coeffs):
                rem[k - db + i] -= c * bi
    return DensePoly(quot), DensePoly(rem[:db])


def poly_ext_gcd(a: DensePoly, b: DensePoly) -> tuple[DensePoly, DensePoly, DensePoly]:
    """Return ``(g, u, v)`` with ``g = u*a + v*b`` and ``g`` the monic gcd."""
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd undefined")
    r0, r1 = a, b
    s0, s1 = DensePoly.constant(1), DensePoly()
    t0, t1 = DensePoly(), DensePoly.constant(1)
    while not r1.is_zero():
        q, r = poly_divrem(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    lc = r0.leading
    inv = 1 / lc
    return r0 * inv, s0 * inv, t0 * inv


class TruncatedSeries:
    """Power series over Q truncated at a fixed order.

    ``coeffs`` always has exactly ``order`` entries (orders 0..order-1).
    Binary operations between series of different order truncate to the
    smaller one.
    """

    __slots__ = ("coeffs", "order")

    def __init__(self, coeffs: Iterable[Scalar], order: int | None = None):
        cs = [Fraction(c) for c in coeffs]
        if order is None:
            order = len(cs)
        if order < 0:
            raise ValueError("negative truncation order")
        cs = cs[:order] + [Fraction(0)] * max(0, order - len(cs))
        self.coeffs = tuple(cs)
        self.order = order

    @classmethod
    def from_poly(cls, p: DensePoly | Sequence[Scalar], order: int) -> TruncatedSeries:
        coeffs = p.coeffs if isinstance(p, DensePoly) else p
        return cls(coeffs, order)

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k]

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TruncatedSeries({[format_rational(c) for c in self.coeffs]}, order={self.order})"

    def _coerce(self, other) -> TruncatedSeries:
        if isinstance(other, TruncatedSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((other,), self.order)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        L = min(self.order, other.order)
        return TruncatedSeries((self.coeffs[i] + other.coeffs[i] for i in range(L)), L)

    __radd__ = __add__

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries((-c for c in self.coeffs), self.order)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TruncatedSeries((c * other for c in self.coeffs), self.order)
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        L = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * L
        for i in range(L):
            if a[i]:
                ai = a[i]
                for j in range(L - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out, L)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self * series_reciprocal(other)

    def shift_down(self) -> TruncatedSeries:
        """Divide by x, which must divide the series; the order drops by one."""
        if self.order and self.coeffs[0] != 0:
            raise ValueError("series is not divisible by x")
        return TruncatedSeries(self.coeffs[1:], max(0, self.order - 1))


def series_reciprocal(a: TruncatedSeries) -> TruncatedSeries:
    """Series ``b`` with ``a*b == 1`` up to the truncation order of ``a``."""
    L = a.order
    if L == 0:
        return TruncatedSeries((), 0)
    a0 = a.coeffs[0]
    if a0 == 0:
        raise ZeroDivisionError("not invertible as series")
    inv0 = 1 / a0
    b = [inv0]
    for k in range(1, L):
        acc = sum((a.coeffs[i] * b[k - i] for i in range(1, k + 1)), Fraction(0))
        b.append(-acc * inv0)
    return TruncatedSeries(b, L)
