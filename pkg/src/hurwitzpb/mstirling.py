"""m-Stirling numbers of the second kind and their weighted variant.

``R(n, k; m) = (1/k!) sum_j (-1)^(k-j) C(k, j) j^n (j)_m`` generalizes
``S(n, k)`` (the case ``m = 0``). Four independent routes are provided:
the alternating sum, the first-kind transform of ``S``, the weighted
Stirling expansion, and the triangular recurrence used by
:func:`m_stirling_table`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .algebra import (
    EgfSeries,
    Polynomial,
    Scalar,
    _q,
    apply_emzd,
    exp_minus_one,
    series_exp_linear,
    series_mul,
    series_pow,
    series_scale,
)
from .errors import IntegralityError
from .stirling import binomial, lah, pochhammer, stirling_first, stirling_second, weighted_stirling


def _as_int(v: Fraction, what: str) -> int:
    if v.denominator != 1:
        raise IntegralityError(f"{what} is not an integer: {v}")
    return v.numerator


def m_stirling_explicit(n: int, k: int, m: int) -> int:
    """Alternating-sum definition with the ``m! C(j+m-1, m)`` weight."""
    if min(n, k, m) < 0:
        return 0
    total = Fraction(0)
    for j in range(k + 1):
        total += (-1) ** (k - j) * comb(k, j) * binomial(j + m - 1, m) * j**n
    return _as_int(total * factorial(m) / factorial(k), f"R({n},{k};{m})")


def m_stirling_pochhammer(n: int, k: int, m: int) -> int:
    """Same sum written with the rising factorial ``(j)_m``."""
    if min(n, k, m) < 0:
        return 0
    total = sum((-1) ** (k - j) * comb(k, j) * j**n * pochhammer(j, m) for j in range(k + 1))
    return _as_int(Fraction(total, factorial(k)), f"R({n},{k};{m})")


def m_stirling_via_first_kind(n: int, k: int, m: int) -> int:
    if min(n, k, m) < 0:
        return 0
    return sum((-1) ** (m - i) * stirling_first(m, i) * stirling_second(n + i, k) for i in range(m + 1))


def m_stirling_via_weighted(n: int, k: int, m: int) -> int:
    if min(n, k, m) < 0:
        return 0
    inner = [
        sum(stirling_first(m, i) * weighted_stirling(j + i, k, m - 1) for i in range(m + 1))
        for j in range(n + 1)
    ]
    total = sum(comb(n, j) * Fraction(1 - m) ** (n - j) * inner[j] for j in range(n + 1))
    return _as_int(total, f"R({n},{k};{m})")


@dataclass(frozen=True)
class MStirlingTable:
    """Rows ``n = 0..N``, columns ``k = 0..N+m`` of ``R(n, k; m)``."""

    m: int
    rows: tuple[tuple[int, ...], ...]

    @property
    def N(self) -> int:
        return len(self.rows) - 1

    @property
    def K(self) -> int:
        return self.N + self.m

    def entry(self, n: int, k: int) -> int:
        if 0 <= n <= self.N and 0 <= k <= self.K:
            return self.rows[n][k]
        return 0

    def diff(self, expected: dict[tuple[int, int], int]) -> list[tuple[int, int, int, int]]:
        """Cells ``(n, k, expected, got)`` where the table disagrees."""
        return [
            (n, k, want, self.entry(n, k))
            for (n, k), want in sorted(expected.items())
            if self.entry(n, k) != want
        ]


def m_stirling_table(N: int, m: int) -> MStirlingTable:
    """Fill the table from the triangular recurrence alone.

    Initial data: ``R(n, 0; m) = [n + m == 0]`` and ``R(0, k; m) = lah(m, k)``.
    """
    if N < 0 or m < 0:
        raise ValueError("N and m must be non-negative")
    K = N + m
    first = [lah(m, k) if k else int(m == 0) for k in range(K + 1)]
    rows = [tuple(first)]
    for n in range(N):
        prev = rows[-1]
        row = [int(n + 1 + m == 0)]
        for k in range(1, K + 1):
            row.append(prev[k - 1] + k * prev[k])
        rows.append(tuple(row))
    return MStirlingTable(m, tuple(rows))


def m_stirling_egf(k: int, m: int, N: int) -> EgfSeries:
    """Series ``e^z (e^{-z} d/dz)^m [ e^{(m-1)z} (e^z - 1)^k / k! ]`` to order ``N``."""
    order = N + m
    body = series_pow(exp_minus_one(order), k)
    body = series_scale(series_mul(series_exp_linear(m - 1, order), body), Fraction(1, factorial(k)))
    reduced = apply_emzd(body, m)
    return series_mul(series_exp_linear(1, N), reduced)


def weighted_m_stirling(n: int, k: int, x: Scalar, m: int) -> Fraction:
    """``(1/k!) sum_j (-1)^(k-j) C(k, j) (j + x)^n (j)_m``."""
    if min(n, k, m) < 0:
        return Fraction(0)
    x = _q(x)
    total = Fraction(0)
    for j in range(k + 1):
        total += (-1) ** (k - j) * comb(k, j) * (j + x) ** n * pochhammer(j, m)
    return total / factorial(k)


def weighted_m_stirling_poly(n: int, k: int, m: int) -> Polynomial:
    if min(n, k, m) < 0:
        return Polynomial()
    xn = Polynomial([0] * n + [1])
    total = Polynomial()
    for j in range(k + 1):
        w = (-1) ** (k - j) * comb(k, j) * pochhammer(j, m)
        if w:
            total = total + xn.shift(j).scale(w)
    return total.scale(Fraction(1, factorial(k)))
