import itertools
import random
from fractions import Fraction

import pytest

from oracles import close_to, zeta_mp
from qhs.closed_forms import bik_pair_formula
from qhs.cyclotomic import cyc_conjugate
from qhs.harmonic import (
    BruteForceCapError,
    QSpec,
    average_ones,
    cyclic_sum_ones,
    cyclic_sum_twos,
    elem_sym_power,
    pattern_sum_ones,
    pattern_sum_twos,
    recurrence_check_22,
    recurrence_check_eap,
    zq_bruteforce,
    zq_dp,
)

F = Fraction


# values frozen from the 50-digit cotangent oracle in tests/oracles.py
@pytest.mark.parametrize(
    "n, s, expected",
    [
        (4, (1,), F(3, 2)),
        (3, (2,), F(1, 3)),
        (5, (1, 1), F(2)),
        (5, (2,), F(0)),
        (6, (6,), F(23485, 12096)),
        (4, (5,), F(-7, 32)),
        (4, (3,), F(-3, 8)),
    ],
)
def test_known_values(n, s, expected):
    assert close_to(zeta_mp(n, s), expected)
    assert zq_dp(n, s) == expected
    assert zq_bruteforce(n, s) == expected


def test_empty_index_vector():
    for n in range(2, 7):
        assert zq_dp(n, ()) == 1
        assert zq_bruteforce(n, ()) == 1


def test_depth_beyond_range_vanishes():
    assert zq_dp(4, (1, 1, 1, 1)) == 0
    assert zq_bruteforce(4, (1, 1, 1, 1)) == 0


def test_rejects_nonpositive_entries():
    with pytest.raises(ValueError):
        zq_dp(5, (1, 0))


def test_bruteforce_cap():
    with pytest.raises(BruteForceCapError, match="use DP"):
        zq_bruteforce(30, (1,) * 7, cap=1000)


def test_dp_order_regression():
    # updating k upwards would let one index fill two slots; compare against
    # enumeration on a vector where that makes a difference
    for n in range(3, 8):
        s = (1, 3, 2)
        assert zq_dp(n, s) == zq_bruteforce(n, s)
    # the wrong (ascending) order gives a different value
    n, s = 5, (1, 2)
    spec = QSpec.root(n)
    T = [spec.one(), spec.zero(), spec.zero()]
    for i in range(1, n):
        for k in (1, 2):
            T[k] = T[k] + T[k - 1] * spec.weight(i, s[k - 1])
    assert T[2] != zq_dp(n, s)


@pytest.mark.parametrize("n", range(2, 7))
def test_dp_matches_bruteforce_exhaustive_small(n):
    for m in range(0, 4):
        for s in itertools.product(range(1, 4), repeat=m):
            assert zq_dp(n, s) == zq_bruteforce(n, s)


def test_non_rational_value_matches_oracle():
    z = zq_dp(5, (1, 2))
    w = zeta_mp(5, (1, 2))
    assert abs(complex(z) - complex(w)) < 1e-12


def test_rational_q_mode():
    spec = QSpec.rational(F(1, 2), 5)
    for s in [(1,), (1, 2), (3, 1, 1)]:
        assert zq_dp(spec, s) == zq_bruteforce(spec, s)
    # single index by hand: sum 1/(1 - 2^-i) for i = 1..4
    assert zq_dp(spec, (1,)) == sum(F(1) / (1 - F(1, 2) ** i) for i in range(1, 5))
    with pytest.raises(ValueError):
        QSpec.rational(F(-1), 3)
    with pytest.raises(ValueError):
        elem_sym_power(spec, 1, 1)


def test_elem_sym_power_examples():
    assert elem_sym_power(7, 3, 0) == 1
    assert elem_sym_power(4, 1, 2) == 1
    assert elem_sym_power(4, 2, 1) == F(1, 4)
    assert elem_sym_power(4, 1, 4) == 0


def test_pattern_sums():
    for n in range(2, 8):
        e3 = elem_sym_power(n, 1, 3)
        for j in (1, 2, 3):
            assert pattern_sum_ones(n, 1, 3, j) == e3
    P = [pattern_sum_ones(5, 2, 2, j) for j in (1, 2)]
    assert P[0] + P[1] == 1
    assert P[0] + P[1] == zq_bruteforce(5, (2, 1)) + zq_bruteforce(5, (1, 2))
    assert pattern_sum_ones(7, 4, 1, 1) == zq_dp(7, (4,))
    with pytest.raises(ValueError):
        pattern_sum_ones(5, 2, 2, 3)


def test_cyclic_sums():
    assert cyclic_sum_ones(5, 2, 2) == 1
    for n in range(2, 11):
        assert cyclic_sum_ones(n, 2, 1) == -F((n - 1) * (n - 5), 12)
    assert cyclic_sum_ones(4, 3, 4) == 0
    assert average_ones(5, 2, 2) == F(1, 2)


def test_two_patterns():
    for n in range(2, 8):
        for m in (1, 2, 3):
            em2 = elem_sym_power(n, 2, m)
            for j in range(1, m + 1):
                assert pattern_sum_twos(n, 2, m, j) == em2
    assert cyclic_sum_twos(4, 3, 1) == F(-3, 8)
    assert cyclic_sum_twos(3, 6, 2) == F(-1, 81)
    assert close_to(zeta_mp(3, (2, 6)) + zeta_mp(3, (6, 2)), F(-1, 81))


@pytest.mark.parametrize("check", [recurrence_check_eap, recurrence_check_22])
def test_recurrence_examples(check):
    for n, A, m in [(5, 2, 1), (4, 3, 2), (2, 2, 1), (6, 5, 1), (4, 2, 1), (2, 5, 3)]:
        res = check(n, A, m)
        assert res and res.lhs == res.rhs


@pytest.mark.parametrize("n", range(2, 13))
def test_recurrences_grid(n):
    for A in range(2, 8):
        for m in range(1, 6):
            assert recurrence_check_eap(n, A, m)
            assert recurrence_check_22(n, A, m)


def test_reversal_is_conjugation():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(2, 12)
        s = tuple(rng.randint(1, 4) for _ in range(rng.randint(1, 4)))
        assert cyc_conjugate(zq_dp(n, s)) == zq_dp(n, s[::-1])


@pytest.mark.parametrize("n", range(2, 13))
def test_pattern_pairs(n):
    for A in range(1, 6):
        for m in range(1, 5):
            for j in range(1, m + 1):
                P = pattern_sum_ones(n, A, m, j)
                pair = P + cyc_conjugate(P)
                assert pair == P + pattern_sum_ones(n, A, m, m + 1 - j)
                assert cyc_conjugate(pair) == pair
                # rational when the pair is the whole cyclic sum or A <= 2
                if A <= 2 or m <= 2:
                    assert pair.is_rational()


def test_pattern_pair_can_be_irrational():
    P = pattern_sum_ones(5, 3, 3, 1)
    pair = P + cyc_conjugate(P)
    assert not pair.is_rational()
    w = sum(zeta_mp(5, s) for s in [(3, 1, 1), (1, 1, 3)])
    assert abs(complex(pair) - complex(w)) < 1e-12


@pytest.mark.parametrize("n", range(2, 15))
def test_real_part_of_two_pattern(n):
    for m in range(1, 6):
        target = 2 * bik_pair_formula(n, m)
        for j in range(1, m + 1):
            P = pattern_sum_ones(n, 2, m, j)
            assert P + cyc_conjugate(P) == target
