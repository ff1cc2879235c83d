from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qhs.exact import (
    DensePoly,
    TruncatedSeries,
    format_rational,
    parse_rational,
    poly_divrem,
    poly_ext_gcd,
    series_reciprocal,
)

F = Fraction
X = DensePoly.x()

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
polys = st.lists(rationals, max_size=6).map(DensePoly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


@pytest.mark.parametrize(
    "a, b, q, r",
    [
        (X**2 - 1, X - 1, X + 1, DensePoly()),
        (X, X, DensePoly.constant(1), DensePoly()),
        (X**4 - 1, X**2 + 1, X**2 - 1, DensePoly()),
    ],
)
def test_divrem_examples(a, b, q, r):
    assert poly_divrem(a, b) == (q, r)


def test_divrem_by_zero():
    with pytest.raises(ZeroDivisionError, match="zero divisor"):
        poly_divrem(X, DensePoly())


def test_ext_gcd_coprime_linear():
    g, u, v = poly_ext_gcd(X - 1, X + 1)
    assert g == 1
    assert (u, v) == (DensePoly.constant(F(-1, 2)), DensePoly.constant(F(1, 2)))


def test_ext_gcd_equal_and_monomials():
    assert poly_ext_gcd(X**2 + 1, X**2 + 1)[0] == X**2 + 1
    assert poly_ext_gcd(X**3, X**2)[0] == X**2


def test_ext_gcd_both_zero():
    with pytest.raises(ValueError, match="gcd undefined"):
        poly_ext_gcd(DensePoly(), DensePoly())


@given(polys, nonzero_polys)
def test_divrem_reconstructs(a, b):
    q, r = poly_divrem(a, b)
    assert b * q + r == a
    assert r.degree < b.degree


@given(polys, polys)
def test_ext_gcd_bezout(a, b):
    if a.is_zero() and b.is_zero():
        return
    g, u, v = poly_ext_gcd(a, b)
    assert u * a + v * b == g
    assert g.leading == 1
    for p in (a, b):
        assert poly_divrem(p, g)[1].is_zero()


@pytest.mark.parametrize(
    "series, expected",
    [
        (TruncatedSeries([1, -1], 4), [1, 1, 1, 1]),
        (TruncatedSeries([1], 3), [1, 0, 0]),
        (TruncatedSeries([1, F(1, 2)], 3), [1, F(-1, 2), F(1, 4)]),
    ],
)
def test_reciprocal_examples(series, expected):
    assert list(series_reciprocal(series).coeffs) == expected


def test_reciprocal_needs_unit():
    with pytest.raises(ZeroDivisionError, match="not invertible as series"):
        series_reciprocal(TruncatedSeries([0, 1], 3))


@settings(max_examples=60)
@given(st.integers(1, 16).flatmap(
    lambda L: st.tuples(st.just(L), rationals.filter(bool), st.lists(rationals, max_size=L))))
def test_reciprocal_property(args):
    L, c0, rest = args
    a = TruncatedSeries([c0] + rest, L)
    prod = a * series_reciprocal(a)
    assert list(prod.coeffs) == [1] + [0] * (L - 1)


def test_mixed_orders_truncate_to_smaller():
    a = TruncatedSeries([1, 1, 1, 1], 4)
    b = TruncatedSeries([1, 2], 2)
    assert (a + b).order == 2
    assert (a * b).coeffs == (1, 3)


def test_shift_down():
    assert TruncatedSeries([0, 2, 3], 3).shift_down() == TruncatedSeries([2, 3], 2)
    with pytest.raises(ValueError):
        TruncatedSeries([1, 2], 2).shift_down()


@given(rationals, rationals, rationals)
def test_fraction_ring_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@pytest.mark.parametrize("q, text", [(F(3, 4), "3/4"), (F(-6, 3), "-2"), (F(0), "0")])
def test_rational_strings(q, text):
    assert format_rational(q) == text
    assert parse_rational(text) == q
