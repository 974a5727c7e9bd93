from fractions import Fraction
from math import factorial

import pytest

from hurwitzpb.mstirling import (
    m_stirling_egf,
    m_stirling_explicit,
    m_stirling_pochhammer,
    m_stirling_table,
    m_stirling_via_first_kind,
    m_stirling_via_weighted,
    weighted_m_stirling,
    weighted_m_stirling_poly,
)
from hurwitzpb.stirling import lah, stirling_second, weighted_stirling

F = Fraction


@pytest.mark.parametrize("n, k, m, want", [(2, 3, 2, 7), (0, 0, 0, 1), (5, 2, 3, 378)])
def test_explicit_examples(n, k, m, want):
    assert m_stirling_explicit(n, k, m) == want
    assert m_stirling_pochhammer(n, k, m) == want


def test_via_first_kind():
    assert m_stirling_via_first_kind(4, 3, 1) == 25
    for n in range(9):
        for k in range(9):
            assert m_stirling_via_first_kind(n, k, 0) == stirling_second(n, k)
            assert m_stirling_via_first_kind(n, k, 1) == stirling_second(n + 1, k)


def test_via_weighted():
    assert m_stirling_via_weighted(3, 3, 2) == 31
    assert m_stirling_via_weighted(2, 4, 3) == 13
    for n in range(1, 7):
        for m in range(7):
            assert m_stirling_via_weighted(n, 1, m) == factorial(m)


def test_four_routes_agree():
    tables = {m: m_stirling_table(10, m) for m in range(6)}
    for n in range(11):
        for m in range(6):
            for k in range(n + m + 1):
                want = m_stirling_explicit(n, k, m)
                assert m_stirling_via_first_kind(n, k, m) == want
                assert m_stirling_via_weighted(n, k, m) == want
                assert tables[m].entry(n, k) == want


class TestTable:
    def test_rows(self):
        assert m_stirling_table(7, 1).rows[7] == (0, 1, 127, 966, 1701, 1050, 266, 28, 1)
        assert m_stirling_table(7, 2).rows[7] == (0, 2, 382, 3991, 9471, 8001, 2912, 490, 37, 1)
        assert m_stirling_table(7, 3).rows[6][:10] == (0, 6, 762, 6525, 13573, 10381, 3486, 548, 39, 1)

    def test_invariants(self):
        for m in range(5):
            t = m_stirling_table(8, m)
            for n in range(9):
                assert t.entry(n, 0) == int(n + m == 0)
                assert t.entry(n, n + m) == 1
                assert all(t.entry(n, k) == 0 for k in range(n + m + 1, t.K + 1))
            for k in range(1, t.K + 1):
                assert t.entry(0, k) == lah(m, k)

    def test_diff_reports_cells(self):
        t = m_stirling_table(2, 1)
        assert t.diff({(2, 2): 3, (1, 1): 9}) == [(1, 1, 9, 1)]


def test_special_values():
    assert m_stirling_explicit(0, 0, 0) == 1
    for m in range(1, 9):
        assert m_stirling_explicit(0, 0, m) == 0
        for k in range(1, 9):
            assert m_stirling_explicit(0, k, m) == lah(m, k)
    for n in range(9):
        for m in range(9):
            if n:
                assert m_stirling_explicit(n, 1, m) == factorial(m)
            assert m_stirling_explicit(n, n + m, m) == 1
            assert m_stirling_explicit(n, n + m + 2, m) == 0


class TestEgf:
    def test_examples(self):
        assert list(m_stirling_egf(1, 0, 5).terms) == [0, 1, 1, 1, 1, 1]
        assert list(m_stirling_egf(2, 1, 4).terms) == [0, 1, 3, 7, 15]
        # R(0,1;2) = lah(2,1) = 2, as printed in row 0 of the m=2 table
        assert list(m_stirling_egf(1, 2, 3).terms) == [2, 2, 2, 2]

    def test_grid(self):
        for m in range(4):
            for k in range(6):
                assert list(m_stirling_egf(k, m, 8).terms) == [m_stirling_explicit(n, k, m) for n in range(9)]


class TestWeighted:
    def test_examples(self):
        for n in range(7):
            for k in range(7):
                assert weighted_m_stirling(n, k, 0, 0) == stirling_second(n, k)
        assert weighted_m_stirling(2, 3, 0, 2) == 7
        # -(1/2)(0)_0 + (3/2)(1)_0
        assert weighted_m_stirling(1, 1, F(1, 2), 0) == 1

    def test_m0_is_weighted_stirling(self):
        for n in range(7):
            for k in range(7):
                assert weighted_m_stirling(n, k, F(2, 5), 0) == weighted_stirling(n, k, F(2, 5))

    @pytest.mark.parametrize("x", [F(0), F(1), F(-1), F(2, 3)])
    def test_recurrence(self, x):
        for m in range(4):
            for n in range(8):
                for k in range(1, n + m + 2):
                    lhs = weighted_m_stirling(n + 1, k, x, m)
                    rhs = weighted_m_stirling(n, k - 1, x, m) + (x + k) * weighted_m_stirling(n, k, x, m)
                    assert lhs == rhs

    def test_x0_is_m_stirling(self):
        for n in range(8):
            for m in range(4):
                for k in range(n + m + 1):
                    assert weighted_m_stirling(n, k, 0, m) == m_stirling_explicit(n, k, m)

    def test_poly(self):
        for n in range(6):
            for m in range(3):
                for k in range(n + m + 1):
                    p = weighted_m_stirling_poly(n, k, m)
                    assert p.degree is None or p.degree <= n
                    for x in (F(0), F(-7, 3), F(5, 2)):
                        assert p(x) == weighted_m_stirling(n, k, x, m)
