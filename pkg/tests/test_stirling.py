from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from hurwitzpb.algebra import Polynomial, exp_minus_one, series_compose, series_pow, series_scale, series_z
from hurwitzpb.stirling import (
    binomial,
    lah,
    pochhammer,
    r_stirling,
    stirling_first,
    stirling_second,
    stirling_second_explicit,
    weighted_stirling,
    weighted_stirling_poly,
)

from oracles import count_lah, count_partitions, count_r_partitions, signed_first_kind

F = Fraction


@pytest.mark.parametrize("n, i, want", [(3, 2, -3), (4, 2, 11), (0, 0, 1), (3, 0, 0), (2, 5, 0)])
def test_stirling_first_examples(n, i, want):
    assert stirling_first(n, i) == want


def test_stirling_first_diagonal():
    assert all(stirling_first(n, n) == 1 for n in range(11))


def test_stirling_first_against_cycle_count():
    for n in range(7):
        for i in range(n + 1):
            assert stirling_first(n, i) == signed_first_kind(n, i)


def test_stirling_first_falling_factorial():
    for n in range(13):
        p = Polynomial([1])
        for t in range(n):
            p = p * Polynomial([-t, 1])
        assert [stirling_first(n, i) for i in range(n + 1)] == list(p.coeffs)


@pytest.mark.parametrize("n, i, want", [(4, 2, 7), (0, 0, 1), (5, 3, 25)])
def test_stirling_second_examples(n, i, want):
    assert stirling_second(n, i) == want


def test_stirling_second_against_partitions():
    for n in range(8):
        for i in range(n + 1):
            assert stirling_second(n, i) == count_partitions(n, i)


def test_stirling_second_recurrence_vs_explicit():
    for n in range(13):
        for i in range(n + 1):
            assert stirling_second(n, i) == stirling_second_explicit(n, i)


def test_stirling_egfs():
    N = 10
    log1p = [F(0)] + [F((-1) ** (j + 1), j) for j in range(1, N + 1)]
    ln = series_compose(log1p, series_z(N))
    for i in range(N + 1):
        s2 = series_scale(series_pow(exp_minus_one(N), i), F(1, factorial(i)))
        s1 = series_scale(series_pow(ln, i), F(1, factorial(i)))
        assert list(s2.terms) == [stirling_second(n, i) for n in range(N + 1)]
        assert list(s1.terms) == [stirling_first(n, i) for n in range(N + 1)]


class TestWeighted:
    def test_at_zero_is_second_kind(self):
        for n in range(7):
            for i in range(7):
                assert weighted_stirling(n, i, 0) == stirling_second(n, i)

    def test_examples(self):
        assert weighted_stirling(1, 0, F(5, 2)) == F(5, 2)
        assert weighted_stirling(2, 1, F(1, 2)) == 2

    @pytest.mark.parametrize("x", [F(0), F(1), F(-1), F(1, 2), F(-3, 2)])
    def test_recurrence(self, x):
        for n in range(10):
            for i in range(1, n + 2):
                assert weighted_stirling(n + 1, i, x) == weighted_stirling(n, i - 1, x) + (x + i) * weighted_stirling(n, i, x)

    def test_poly_examples(self):
        assert weighted_stirling_poly(2, 1) == Polynomial([1, 2])
        assert weighted_stirling_poly(1, 0) == Polynomial([0, 1])
        assert all(weighted_stirling_poly(n, n) == Polynomial([1]) for n in range(7))

    @given(st.integers(0, 8), st.integers(0, 8), st.fractions(min_value=-20, max_value=20, max_denominator=9))
    def test_poly_matches_value(self, n, i, x):
        assert weighted_stirling_poly(n, i)(x) == weighted_stirling(n, i, x)


class TestRStirling:
    def test_r_zero(self):
        for n in range(7):
            for i in range(n + 1):
                assert r_stirling(n, i, 0) == stirling_second(n, i)

    def test_examples(self):
        assert r_stirling(1, 1, 1) == 1
        assert r_stirling(2, 1, 1) == 3

    def test_against_enumeration(self):
        for r in range(4):
            for n in range(5):
                for i in range(n + 1):
                    assert r_stirling(n, i, r) == count_r_partitions(n + r, i + r, r)


class TestLah:
    def test_examples(self):
        assert lah(3, 1) == 6 and lah(3, 2) == 6
        assert lah(2, 1) == 2
        assert all(lah(m, m) == 1 for m in range(7))

    def test_conventions(self):
        assert lah(0, 0) == 1
        assert lah(3, 0) == 0
        assert lah(2, 3) == 0

    def test_against_ordered_partitions(self):
        for m in range(1, 7):
            for k in range(1, m + 1):
                assert lah(m, k) == count_lah(m, k)


def test_pochhammer():
    assert pochhammer(F(7, 3), 0) == 1
    assert pochhammer(2, 3) == 24
    assert all(pochhammer(1, n) == factorial(n) for n in range(9))


def test_binomial():
    assert binomial(5, 2) == 10
    assert binomial(3, 4) == 0
    assert binomial(3, -1) == 0
    assert binomial(-1, 0) == 1
    assert binomial(-1, 3) == -1


def test_first_kind_orthogonality_step():
    for j in range(9):
        for m in range(9):
            assert sum((-1) ** (m - i) * stirling_first(m, i) * j**i for i in range(m + 1)) == pochhammer(j, m)
