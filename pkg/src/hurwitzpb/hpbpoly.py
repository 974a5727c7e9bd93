"""m-Hurwitz type poly-Bernoulli polynomials ``MB(n, m, k; x, a)``.

Every builder returns an :class:`HpbPolynomial`; the polynomials are
canonical, so two routes agree iff their coefficient tuples are equal.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

from .algebra import EgfSeries, Polynomial, Scalar, series_exp_linear, series_mul
from .polybern import _check_nm, _mach_coeff, check_a, hurwitz_pb_egf, m_hpb_form1
from .mstirling import m_stirling_explicit, weighted_m_stirling_poly
from .stirling import stirling_second, weighted_stirling, weighted_stirling_poly

_ONE_MINUS_X = Polynomial([1, -1])
_MINUS_X = Polynomial([0, -1])


@dataclass(frozen=True)
class HpbPolynomial:
    n: int
    m: int
    k: int
    a: Fraction
    poly: Polynomial

    def __call__(self, x: Scalar) -> Fraction:
        return self.poly(x)


def _binomial_convolution(values: list[Fraction]) -> Polynomial:
    """``sum_i (-1)^(n-i) C(n, i) values[i] x^(n-i)`` with ``n = len(values) - 1``."""
    n = len(values) - 1
    coeffs = [Fraction(0)] * (n + 1)
    for i, v in enumerate(values):
        coeffs[n - i] = (-1) ** (n - i) * comb(n, i) * v
    return Polynomial(coeffs)


def hpb_poly_convolution(n: int, m: int, k: int, a: Scalar) -> HpbPolynomial:
    a = check_a(a)
    _check_nm(n=n, m=m)
    numbers = [m_hpb_form1(i, m, k, a) for i in range(n + 1)]
    return HpbPolynomial(n, m, k, a, _binomial_convolution(numbers))


def hpb_poly_explicit(n: int, m: int, k: int, a: Scalar) -> HpbPolynomial:
    """Weighted-Stirling form, with ``S_n^i`` evaluated at ``x + m``."""
    a = check_a(a)
    _check_nm(n=n, m=m)
    total = Polynomial()
    for i in range(n + 1):
        w = (-1) ** (n - i) * factorial(i + m) * (i + m + a) ** -k
        total = total + weighted_stirling_poly(n, i).shift(m).scale(w)
    prefactor = (m + a) ** k / (factorial(m) * a**k)
    return HpbPolynomial(n, m, k, a, total.scale(prefactor))


def hpb_poly_matrix(N: int, k: int, a: Scalar) -> list[list[Polynomial]]:
    """Polynomial analogue of :func:`~hurwitzpb.polybern.m_hpb_matrix`.

    ``rows[n][m]`` for ``n + m <= N``; column 0 gives ``HB_n^(k)(x; a)``.
    The step is ``MB(n+1, m) = c_m MB(n, m+1) - (x + m) MB(n, m)``.
    """
    a = check_a(a)
    _check_nm(N=N)
    x = Polynomial.x()
    rows = [[Polynomial.constant(a**-k) for _ in range(N + 1)]]
    for n in range(1, N + 1):
        prev = rows[-1]
        rows.append([
            prev[m + 1].scale(_mach_coeff(m, k, a)) - (x + m) * prev[m]
            for m in range(N - n + 1)
        ])
    return rows


def hpb_poly_recurrence_check(N: int, k: int, a: Scalar, printed: bool = False) -> list[tuple[int, int]]:
    """Grid points ``(n, m)`` with ``n + 1 + m <= N`` where the three-term
    recurrence fails as a polynomial identity. Empty means it holds.

    The multiplier on ``MB(n, m)`` is ``-(x + m)``. With ``printed=True`` it
    is ``x - m`` instead, which only holds for the reflected polynomials
    ``MB(n, m; -x)``, so every grid point is reported.
    """
    a = check_a(a)
    x = Polynomial.x()
    mult = (lambda m: x - m) if printed else (lambda m: -(x + m))
    polys = {
        (n, m): hpb_poly_convolution(n, m, k, a).poly
        for n in range(N + 1)
        for m in range(N + 1 - n)
    }
    bad = []
    for n in range(N):
        for m in range(N - n):
            rhs = polys[n, m + 1].scale(_mach_coeff(m, k, a)) + mult(m) * polys[n, m]
            if polys[n + 1, m] != rhs:
                bad.append((n, m))
    return bad


def lemma_identity(n: int, l: int, m: int) -> tuple[Polynomial, Polynomial]:
    """Both sides of the signed binomial transform of ``R(i+1, l+1; m)``.

    lhs: ``sum_i (-1)^(n-i) C(n, i) R(i+1, l+1; m) x^(n-i)``
    rhs: ``R(n+1, l+1; -x, m) + x R(n, l+1; -x, m)``
    """
    lhs = _binomial_convolution([Fraction(m_stirling_explicit(i + 1, l + 1, m)) for i in range(n + 1)])
    rhs = (
        weighted_m_stirling_poly(n + 1, l + 1, m).compose(_MINUS_X)
        + Polynomial.x() * weighted_m_stirling_poly(n, l + 1, m).compose(_MINUS_X)
    )
    return lhs, rhs


def lemma_identity_m0(n: int, l: int) -> tuple[Polynomial, Polynomial]:
    """``m = 0`` case: lhs in ``S(i+1, l+1)`` against ``S_n^l(1 - x)``."""
    lhs = _binomial_convolution([Fraction(stirling_second(i + 1, l + 1)) for i in range(n + 1)])
    return lhs, weighted_stirling_poly(n, l).compose(_ONE_MINUS_X)


def hpb_poly_negative(n: int, m: int, kpos: int, a: Scalar, upper: int | None = None) -> HpbPolynomial:
    """``MB(n, m, -kpos; x, a)`` through weighted m-Stirling polynomials.

    As with :func:`~hurwitzpb.polybern.m_hpb_negative`, the ``l`` sum runs
    to ``kpos`` unless ``upper`` is given.
    """
    a = check_a(a)
    _check_nm(n=n, m=m, kpos=kpos)
    top = kpos if upper is None else upper
    x = Polynomial.x()
    total = Polynomial()
    for l in range(top + 1):
        w = weighted_stirling(kpos, l, a)
        if not w:
            continue
        bracket = (
            weighted_m_stirling_poly(n + 1, l + 1, m).compose(_MINUS_X)
            + x * weighted_m_stirling_poly(n, l + 1, m).compose(_MINUS_X)
        )
        total = total + bracket.scale(factorial(l) ** 2 * w)
    prefactor = a**kpos / (factorial(m) * (m + a) ** kpos)
    return HpbPolynomial(n, m, -kpos, a, total.scale(prefactor))


def corollary_last(n: int, kpos: int) -> Polynomial:
    """Poly-Bernoulli polynomial ``B_n^(-k)(x)`` as
    ``sum_l (l!)^2 S(k+1, l+1) S_n^l(1 - x)``."""
    _check_nm(n=n, kpos=kpos)
    total = Polynomial()
    for l in range(min(n, kpos) + 1):
        total = total + weighted_stirling_poly(n, l).compose(_ONE_MINUS_X).scale(
            factorial(l) ** 2 * stirling_second(kpos + 1, l + 1)
        )
    return total


def hpb_poly_egf(k: int, a: Scalar, x: Scalar, N: int) -> EgfSeries:
    """``Phi(1 - e^{-z}, k, a) e^{-xz}`` truncated at order ``N``."""
    return series_mul(hurwitz_pb_egf(k, a, N), series_exp_linear(-Fraction(x), N))
