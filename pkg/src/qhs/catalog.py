"""Catalog of printed closed-form displays, each paired with its ground truth.

Every entry evaluates one display exactly as printed (including any
intermediate lines that restate the same quantity) and names the DP quantity
it claims to equal. Displays known to disagree with the DP carry
``status="suspected_typo"`` together with the grid points where the
disagreement was observed; those points must keep disagreeing.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from . import closed_forms as cf
from .harmonic import (
    cyclic_sum_ones,
    cyclic_sum_twos,
    elem_sym_power,
    pattern_sum_ones,
    zq_dp,
)
from .cyclotomic import rational_part
from .sequences import binomial

__all__ = ["FormulaEntry", "literal_display_catalog", "get_entry", "catalog_json"]

F = Fraction
VERIFIED = "verified"
SUSPECTED_TYPO = "suspected_typo"


@dataclass(frozen=True)
class FormulaEntry:
    id: str
    location: str
    params: tuple[str, ...]
    domain: Callable[..., bool]
    domain_text: str
    evaluator: Callable[..., Fraction]
    truth: Callable[..., Fraction]
    expected_status: str = VERIFIED
    witnesses: tuple[dict, ...] = field(default=())

    def in_domain(self, **params) -> bool:
        return self.domain(**params)

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "location": self.location,
            "domain": self.domain_text,
            "params": list(self.params),
            "status": self.expected_status,
            "witnesses": [dict(w) for w in self.witnesses],
        }


def _c(n: int, k: int) -> int:
    return binomial(n, k)


def _pair(n: int, a: int, sign_exp: int, b: int) -> int:
    return _c(n - 1, a) + (-1) ** sign_exp * _c(n - 1, b)


def _z(n: int, s: int) -> Fraction:
    return cf.zeta_single_table(n, s)


def _single(n: int, s: int) -> Fraction:
    return rational_part(zq_dp(n, (s,)))


# ---------------------------------------------------------------- 2-patterns

def _r3_expanded(n: int, m: int) -> Fraction:
    return (F(n - 1, 2) * F(_pair(n, m, m, 2 * m + 1), n * (m + 1))
            - F(_pair(n, m + 1, m, 2 * m + 2), n))


def _r3_simplified(n: int, m: int) -> Fraction:
    return (-F(n - 2 * m - 1, 2 * n**2) * binomial(n, m + 1)
            + F((2 * m + 1) * (-1) ** m, n**2) * binomial(n, 2 * m + 2))


def _r4(n: int, m: int) -> Fraction:
    return (-F((n - 1) * (n - 5), 12 * n * (m + 1)) * _pair(n, m, m, 2 * m + 1)
            - F(m + 1, n * (m + 2)) * _pair(n, m + 1, m + 1, 2 * m + 3))


def _r5(n: int, m: int) -> Fraction:
    return (-F((n - 1) * (n - 3), 8 * n * (m + 1)) * _pair(n, m, m, 2 * m + 1)
            + F(n - 2 * m - 3, 2 * n**2) * binomial(n, m + 2)
            - F((2 * m + 3) * (-1) ** (m + 1), n**2) * binomial(n, 2 * m + 4))


def _r6(n: int, m: int) -> Fraction:
    z4 = F((n - 1) * (n**3 + n**2 - 109 * n + 251), math.factorial(6))
    return (z4 / (n * (m + 1)) * _pair(n, m, m + 1, 2 * m + 1)
            + F((n - 1) * (n - 5), 12 * n * (m + 2)) * _pair(n, m + 1, m, 2 * m + 3)
            + F(m + 2, n * (m + 3)) * _pair(n, m + 2, m, 2 * m + 5))


def _r7(n: int, m: int) -> Fraction:
    return (F((n - 1) * (n - 5) * (n**2 + 6 * n - 19), 288 * n * (m + 1)) * _pair(n, m, m, 2 * m + 1)
            + F((n - 1) * (n - 3), 8 * n * (m + 2)) * _pair(n, m + 1, m + 1, 2 * m + 3)
            - F(n - 2 * m - 5, 2 * n**2) * binomial(n, m + 3)
            + F((2 * m + 5) * (-1) ** m, n**2) * binomial(n, 2 * m + 6))


def _r8(n: int, m: int) -> Fraction:
    p6 = 2 * n**5 + 2 * n**4 - 355 * n**3 - 355 * n**2 + 11153 * n - 19087
    z4num = (n - 1) * (n**3 + n**2 - 109 * n + 251)
    return (-F((n - 1) * p6, 12 * math.factorial(7) * n * (m + 1)) * _pair(n, m, m, 2 * m + 1)
            - F(z4num, math.factorial(6) * n * (m + 2)) * _pair(n, m + 1, m + 1, 2 * m + 3)
            - F((n - 1) * (n - 5), 12 * n * (m + 3)) * _pair(n, m + 2, m, 2 * m + 5)
            - F(m + 3, n * (m + 4)) * _pair(n, m + 3, m + 1, 2 * m + 7))


def _mixed_24(n: int) -> Fraction:
    poly = 5 * n**4 - 27 * n**3 - 469 * n**2 + 5787 * n - 13936
    return -F((n - 1) * (n - 2) * poly, 12 * math.factorial(7))


def _mixed_26(n: int) -> Fraction:
    poly = 7 * n**6 - 39 * n**5 - 946 * n**4 + 7950 * n**3 + 33743 * n**2 - 411111 * n + 773596
    return -F((n - 1) * (n - 2) * poly, math.factorial(10))


def _mixed_truth(A: int):
    def truth(n: int) -> Fraction:
        return cyclic_sum_twos(n, A, 2)
    return truth


def _twos_truth(A: int):
    def truth(n: int, m: int) -> Fraction:
        return cyclic_sum_twos(n, A, m)
    return truth


# ---------------------------------------------------------------- 1-patterns

def _ones_poly(A: int):
    def ev(n: int, m: int) -> Fraction:
        return cf.theorem1_formula(n, A, m)
    return ev


def _ones_truth(A: int):
    def truth(n: int, m: int) -> Fraction:
        return cyclic_sum_ones(n, A, m)
    return truth


def _ones_a3_step1(n: int, m: int) -> Fraction:
    # printed value of the sum over j of P_{m+1}^(2,j)
    return -F((m + 1) * math.factorial(m + 1) * (n - 2 * m - 5),
              2 * math.factorial(m + 3)) * _c(n - 1, m)


def _ones_a3_step2(n: int, m: int) -> Fraction:
    return (_z(n, 2) * F(_c(n - 1, m), m + 1)
            + F((m + 1) * math.factorial(m + 1) * (n - 2 * m - 5),
                2 * math.factorial(m + 3)) * _c(n - 1, m + 1))


def _bik_pair_sum(n: int, m: int, j: int) -> Fraction:
    return -F(math.factorial(m) * (n - 2 * m - 3), math.factorial(m + 2)) * _c(n - 1, m)


def _bik_pair_truth(n: int, m: int, j: int) -> Fraction:
    return rational_part(pattern_sum_ones(n, 2, m, j) + pattern_sum_ones(n, 2, m, m + 1 - j))


def _any(**_kw) -> bool:
    return True


def _build() -> tuple[FormulaEntry, ...]:
    E = FormulaEntry
    entries: list[FormulaEntry] = []
    for s in cf.TABLE_RANGE:
        entries.append(E(
            f"table-s{s}", f"single-index value table, s={s}", ("n",), _any, "n >= 2",
            (lambda s: lambda n: _z(n, s))(s), (lambda s: lambda n: _single(n, s))(s),
        ))
    entries += [
        E("ones-em", "all-ones sum e_m = C(n-1,m)/(m+1)", ("n", "m"), _any, "n >= 2, m >= 1",
          cf.ones_em_formula, lambda n, m: elem_sym_power(n, 1, m)),
        E("single-determinant", "Hessenberg determinant for Z_n(s)", ("n", "s"), _any,
          "n >= 2, s >= 1", cf.zeta_single_determinant, _single),
        E("single-degber", "Z_n(s) via degenerate Bernoulli numbers", ("n", "s"), _any,
          "n >= 2, s >= 1", cf.zeta_single_degber, _single),
        E("single-degberpoly", "Z_n(s) via degenerate Bernoulli polynomials", ("n", "s"), _any,
          "n >= 2, s >= 1", cf.zeta_single_degberpoly, _single),
        E("bik-pair-sum", "P_m^(2,j) + P_m^(2,m+1-j) (reversed 1..1,2,1..1 pair)",
          ("n", "m", "j"), lambda n, m, j: m >= 2 and n >= 2, "n >= 2, m >= 2, 1 <= j <= m",
          _bik_pair_sum, _bik_pair_truth),
    ]
    for A in (2, 3, 4, 5):
        entries.append(E(
            f"ones-poly-A{A}", f"polynomial closed form of F_m^(A), A={A}", ("n", "m"), _any,
            "n >= 2, m >= 1", _ones_poly(A), _ones_truth(A),
        ))
    entries += [
        E("ones-A3-step1", "A=3 derivation: sum_j P_{m+1}^(2,j) as printed", ("n", "m"), _any,
          "n >= 2, m >= 1", _ones_a3_step1, lambda n, m: cyclic_sum_ones(n, 2, m + 1),
          SUSPECTED_TYPO, ({"n": 3, "m": 1}, {"n": 5, "m": 1}, {"n": 6, "m": 1})),
        E("ones-A3-step2", "A=3 derivation: second line of F_m^(3)", ("n", "m"), _any,
          "n >= 2, m >= 1", _ones_a3_step2, _ones_truth(3)),
        E("ones-degber", "F_m^(A) via degenerate Bernoulli numbers", ("n", "A", "m"),
          lambda n, A, m: A >= 2, "n >= 2, A >= 2, m >= 1",
          cf.theorem2_formula, lambda n, A, m: cyclic_sum_ones(n, A, m)),
        E("em2", "e_m^(2) closed form", ("n", "m"), _any, "n >= 2, m >= 1",
          cf.em2_formula, lambda n, m: elem_sym_power(n, 2, m)),
        E("twos-A1", "sum_j R_m^(1,j) closed form", ("n", "m"), _any, "n >= 2, m >= 1",
          cf.r1_sum_formula, _twos_truth(1)),
        E("R3-expanded", "2-pattern display, A=3 (unsimplified line)", ("n", "m"), _any,
          "n >= 2, m >= 1", _r3_expanded, _twos_truth(3)),
        E("R3", "2-pattern display, A=3", ("n", "m"), _any, "n >= 2, m >= 1",
          _r3_simplified, _twos_truth(3)),
        E("R4", "2-pattern display, A=4", ("n", "m"), _any, "n >= 2, m >= 1", _r4, _twos_truth(4)),
        E("R5", "2-pattern display, A=5", ("n", "m"), _any, "n >= 2, m >= 1", _r5, _twos_truth(5)),
        E("R6", "2-pattern display, A=6", ("n", "m"), _any, "n >= 2, m >= 1", _r6, _twos_truth(6),
          SUSPECTED_TYPO, ({"n": 4, "m": 1}, {"n": 6, "m": 1}, {"n": 6, "m": 2})),
        E("R7", "2-pattern display, A=7", ("n", "m"), _any, "n >= 2, m >= 1", _r7, _twos_truth(7)),
        E("R8", "2-pattern display, A=8", ("n", "m"), _any, "n >= 2, m >= 1", _r8, _twos_truth(8)),
        E("mixed-m2-A4", "Z(2,4) + Z(4,2)", ("n",), _any, "n >= 2", _mixed_24, _mixed_truth(4)),
        E("mixed-m2-A6", "Z(2,6) + Z(6,2)", ("n",), _any, "n >= 2", _mixed_26, _mixed_truth(6),
          SUSPECTED_TYPO, ({"n": 3}, {"n": 4})),
        E("twos-degber", "sum_j R_m^(A,j) via degenerate Bernoulli numbers, both parities",
          ("n", "A", "m"), lambda n, A, m: A >= 1, "n >= 2, A >= 1, m >= 1",
          cf.theorem4_formula, lambda n, A, m: cyclic_sum_twos(n, A, m)),
    ]
    return tuple(entries)


_CATALOG = _build()
_BY_ID = {e.id: e for e in _CATALOG}


def literal_display_catalog() -> tuple[FormulaEntry, ...]:
    return _CATALOG


def get_entry(entry_id: str) -> FormulaEntry:
    return _BY_ID[entry_id]


def catalog_json() -> list[dict]:
    return [e.to_json() for e in _CATALOG]
