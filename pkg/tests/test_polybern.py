from fractions import Fraction

import pytest

from hurwitzpb.errors import ParameterDomainError
from hurwitzpb.polybern import (
    ParamSet,
    bernoulli,
    duality_check,
    hurwitz_pb,
    hurwitz_pb_egf,
    m_hpb_egf,
    m_hpb_form1,
    m_hpb_form2,
    m_hpb_matrix,
    m_hpb_negative,
)

from oracles import bernoulli_plus, count_lonesum

F = Fraction
A_GRID = (F(1), F(2), F(1, 2), F(3, 2))


class TestHurwitzPB:
    def test_examples(self):
        assert hurwitz_pb(1, 1, 1) == F(1, 2)
        assert hurwitz_pb(2, -1, 1) == 4
        for k, a in ((2, 1), (-1, 3), (1, F(1, 2))):
            assert hurwitz_pb(0, k, a) == F(a) ** -k

    @pytest.mark.parametrize("a", [0, -1, -5, "0/3"])
    def test_bad_a(self, a):
        with pytest.raises(ParameterDomainError):
            hurwitz_pb(2, 1, a)

    def test_negative_a_non_integer_ok(self):
        assert hurwitz_pb(0, 1, F(-1, 2)) == -2

    def test_lonesum_counts(self):
        for n in range(5):
            for k in range(5):
                if n * k <= 16:
                    assert hurwitz_pb(n, -k, 1) == count_lonesum(n, k)

    def test_egf(self):
        for k in range(-3, 4):
            for a in A_GRID:
                assert list(hurwitz_pb_egf(k, a, 10).terms) == [hurwitz_pb(n, k, a) for n in range(11)]


def test_paramset():
    p = ParamSet(2, 1, -3, "3/2")
    assert p.a == F(3, 2)
    with pytest.raises(ParameterDomainError):
        ParamSet(2, 1, 1, -2)
    with pytest.raises(ParameterDomainError):
        ParamSet(-1, 0, 1, 1)


class TestBernoulli:
    def test_values(self):
        assert bernoulli(0) == 1
        assert bernoulli(1) == F(1, 2)
        assert bernoulli(4) == F(-1, 30)

    def test_against_recurrence(self):
        assert [bernoulli(n) for n in range(16)] == bernoulli_plus(15)

    def test_matrix_column(self):
        assert m_hpb_matrix(12, 1, 1).column0() == bernoulli_plus(12)


class TestMHPB:
    def test_m0_is_hurwitz(self):
        for n in range(7):
            for k in (-2, 1, 2):
                for a in (1, F(1, 2)):
                    assert m_hpb_form1(n, 0, k, a) == hurwitz_pb(n, k, a)
                    assert m_hpb_form2(n, 0, k, a) == hurwitz_pb(n, k, a)

    def test_row_zero(self):
        for m in range(5):
            for k in (-2, 0, 3):
                assert m_hpb_form1(0, m, k, F(1, 2)) == F(1, 2) ** -k

    def test_hand_value(self):
        assert m_hpb_form1(1, 1, 1, 1) == F(1, 3)

    def test_form2_m1(self):
        for n in range(6):
            for a in (1, F(1, 2)):
                assert m_hpb_form2(n, 1, 2, a) == ((1 + a) / F(a)) ** 2 * hurwitz_pb(n + 1, 2, a)

    def test_three_way(self):
        for k in range(-3, 4):
            for a in A_GRID:
                mat = m_hpb_matrix(8, k, a)
                for n in range(9):
                    for m in range(9 - n):
                        v = m_hpb_form1(n, m, k, a)
                        assert m_hpb_form2(n, m, k, a) == v
                        assert mat[n, m] == v

    def test_matrix_shape(self):
        mat = m_hpb_matrix(5, 2, F(3, 2))
        assert [len(r) for r in mat.entries] == [6, 5, 4, 3, 2, 1]
        assert set(mat.entries[0]) == {F(4, 9)}

    def test_rodrigues_egf(self):
        for m in range(4):
            for k in (-2, 2):
                for a in (1, F(1, 2)):
                    assert list(m_hpb_egf(m, k, a, 8).terms) == [m_hpb_form1(n, m, k, a) for n in range(9)]


class TestNegativeIndex:
    def test_examples(self):
        assert m_hpb_negative(1, 0, 1, 1) == 2
        assert m_hpb_negative(2, 0, 1, 1) == 4
        for m in range(5):
            assert m_hpb_negative(0, m, 3, F(1, 2)) == F(1, 8)

    def test_matches_form1(self):
        for k in range(4):
            for a in (1, F(1, 2)):
                for n in range(9):
                    for m in range(9 - n):
                        assert m_hpb_negative(n, m, k, a) == m_hpb_form1(n, m, -k, a)

    def test_recurrence(self):
        for k in range(4):
            for a in (F(1), F(1, 2)):
                for n in range(8):
                    for m in range(8 - n):
                        lhs = m_hpb_form1(n + 1, m, -k, a)
                        rhs = (m + 1) * (m + a + 1) ** k / (m + a) ** k * m_hpb_form1(n, m + 1, -k, a) \
                            - m * m_hpb_form1(n, m, -k, a)
                        assert lhs == rhs

    def test_min_n_k_truncation(self):
        # at m = 0 stopping at min(n, k) loses nothing
        for n in range(7):
            for k in range(7):
                assert m_hpb_negative(n, 0, k, 1, upper=min(n, k)) == m_hpb_negative(n, 0, k, 1)
        # for m > 0 the terms with n < l <= k are needed
        assert m_hpb_negative(0, 1, 1, 1, upper=0) == F(1, 2)
        assert m_hpb_negative(0, 1, 1, 1) == 1 == m_hpb_form1(0, 1, -1, 1)


class TestDuality:
    def test_examples(self):
        assert hurwitz_pb(1, -2, 1) == hurwitz_pb(2, -1, 1) == 4
        assert hurwitz_pb(0, -5, 1) == hurwitz_pb(5, 0, 1) == 1

    def test_grid(self):
        assert duality_check(10, 10) == []

    def test_negative_formula_m0(self):
        for n in range(11):
            for k in range(11):
                assert m_hpb_negative(n, 0, k, 1) == hurwitz_pb(n, -k, 1)
