"""Hurwitz-type poly-Bernoulli numbers and their m-generalization.

``HB(n, k, a)`` is the coefficient sequence of ``Phi(1 - e^{-z}, k, a)``
and ``MB(n, m, k, a)`` denotes the m-Hurwitz type numbers, whose ``m = 0``
column recovers ``HB``. Values are exact :class:`~fractions.Fraction`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .algebra import (
    EgfSeries,
    Scalar,
    apply_ezd,
    one_minus_exp_neg,
    series_compose,
    series_exp_linear,
    series_mul,
    series_scale,
)
from .errors import ParameterDomainError
from .mstirling import m_stirling_explicit
from .stirling import r_stirling, stirling_first, stirling_second, weighted_stirling


def check_a(a: Scalar) -> Fraction:
    """Coerce ``a`` to a Fraction, rejecting ``0, -1, -2, ...``."""
    try:
        a = Fraction(a)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParameterDomainError(f"a must be rational, got {a!r}") from exc
    if a.denominator == 1 and a <= 0:
        raise ParameterDomainError(f"a must not be a non-positive integer, got {a}")
    return a


@dataclass(frozen=True)
class ParamSet:
    n: int
    m: int
    k: int
    a: Fraction

    def __post_init__(self):
        if self.n < 0 or self.m < 0:
            raise ParameterDomainError("n and m must be non-negative")
        object.__setattr__(self, "a", check_a(self.a))


def _check_nm(**kw: int) -> None:
    for name, v in kw.items():
        if v < 0:
            raise ParameterDomainError(f"{name} must be non-negative, got {v}")


def hurwitz_pb(n: int, k: int, a: Scalar) -> Fraction:
    """``sum_i (-1)^(n+i) i! S(n, i) / (i + a)^k``."""
    a = check_a(a)
    _check_nm(n=n)
    total = Fraction(0)
    for i in range(n + 1):
        s = stirling_second(n, i)
        if s:
            total += (-1) ** (n + i) * factorial(i) * s * (i + a) ** -k
    return total


def bernoulli(n: int) -> Fraction:
    """Bernoulli numbers with ``B_1 = +1/2``."""
    return hurwitz_pb(n, 1, 1)


def m_hpb_form1(n: int, m: int, k: int, a: Scalar) -> Fraction:
    """Sum over r-Stirling numbers ``{n+m, i+m}_m``."""
    a = check_a(a)
    _check_nm(n=n, m=m)
    total = Fraction(0)
    for i in range(n + 1):
        total += r_stirling(n, i, m) * (-1) ** (n - i) * factorial(i + m) * (i + m + a) ** -k
    return (m + a) ** k / (factorial(m) * a**k) * total


def m_hpb_form2(n: int, m: int, k: int, a: Scalar) -> Fraction:
    """First-kind Stirling transform of the ``HB`` column."""
    a = check_a(a)
    _check_nm(n=n, m=m)
    total = Fraction(0)
    for i in range(m + 1):
        total += (-1) ** (m - i) * stirling_first(m, i) * hurwitz_pb(n + i, k, a)
    return (m + a) ** k / (factorial(m) * a**k) * total


@dataclass(frozen=True)
class HpbMatrix:
    """Entries ``MB(n, m, k, a)`` for ``n + m <= N`` as ``entries[n][m]``."""

    k: int
    a: Fraction
    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def N(self) -> int:
        return len(self.entries) - 1

    def __getitem__(self, nm: tuple[int, int]) -> Fraction:
        n, m = nm
        return self.entries[n][m]

    def column0(self) -> list[Fraction]:
        return [row[0] for row in self.entries]


def _mach_coeff(m: int, k: int, a: Fraction) -> Fraction:
    return (m + 1) * (m + a) ** k / (m + a + 1) ** k


def m_hpb_matrix(N: int, k: int, a: Scalar) -> HpbMatrix:
    """Three-term recurrence fill, starting from the row ``1/a^k``.

    Row ``n`` holds ``m = 0..N-n``; each step consumes the previous row.
    """
    a = check_a(a)
    _check_nm(N=N)
    coeff = [_mach_coeff(m, k, a) for m in range(N)]
    rows = [tuple(a**-k for _ in range(N + 1))]
    for n in range(1, N + 1):
        prev = rows[-1]
        rows.append(tuple(coeff[m] * prev[m + 1] - m * prev[m] for m in range(N - n + 1)))
    return HpbMatrix(k, a, tuple(rows))


def m_hpb_negative(n: int, m: int, kpos: int, a: Scalar, upper: int | None = None) -> Fraction:
    """``MB(n, m, -kpos, a)`` via weighted Stirling and m-Stirling numbers.

    The sum over ``l`` runs to ``kpos``: ``S_k^l(a)`` vanishes past that,
    while ``R(n+1, l+1; m)`` does not vanish for ``n < l <= n+m``.
    ``upper`` overrides the last index (used to probe truncations).
    """
    a = check_a(a)
    _check_nm(n=n, m=m, kpos=kpos)
    top = kpos if upper is None else upper
    total = Fraction(0)
    for l in range(top + 1):
        w = weighted_stirling(kpos, l, a)
        if w:
            total += factorial(l) ** 2 * w * m_stirling_explicit(n + 1, l + 1, m)
    return a**kpos / (factorial(m) * (m + a) ** kpos) * total


def duality_check(nmax: int, kmax: int) -> list[tuple[int, int, Fraction, Fraction]]:
    """Pairs ``(n, k, B_n^(-k), B_k^(-n))`` that disagree; empty when duality holds."""
    bad = []
    for n in range(nmax + 1):
        for k in range(kmax + 1):
            lhs, rhs = hurwitz_pb(n, -k, 1), hurwitz_pb(k, -n, 1)
            if lhs != rhs:
                bad.append((n, k, lhs, rhs))
    return bad


# -- generating functions ----------------------------------------------------


def lerch_coefficients(k: int, a: Scalar, count: int) -> list[Fraction]:
    """Ordinary coefficients ``1/(i + a)^k`` of ``Phi(w, k, a)`` in ``w``."""
    a = check_a(a)
    return [(i + a) ** -k for i in range(count)]


def hurwitz_pb_egf(k: int, a: Scalar, N: int) -> EgfSeries:
    """``Phi(1 - e^{-z}, k, a)`` truncated at order ``N``."""
    return series_compose(lerch_coefficients(k, a, N + 1), one_minus_exp_neg(N))


def m_hpb_egf(m: int, k: int, a: Scalar, N: int) -> EgfSeries:
    """Rodrigues-type series for ``MB(., m, k, a)`` truncated at order ``N``.

    ``(1/m!) e^{-mz} (1 + m/a)^k (e^z d/dz)^m [w^m Phi(w, k, m+a)]`` with
    ``w = 1 - e^{-z}``; the bracket is built at order ``N + m``.
    """
    a = check_a(a)
    _check_nm(m=m, N=N)
    order = N + m
    outer = [Fraction(0)] * m + lerch_coefficients(k, m + a, order + 1 - m)
    body = series_compose(outer, one_minus_exp_neg(order))
    reduced = apply_ezd(body, m)
    out = series_mul(series_exp_linear(-m, N), reduced)
    return series_scale(out, (1 + m / a) ** k / factorial(m))
