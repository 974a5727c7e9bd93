"""Exact polynomial and truncated EGF arithmetic over the rationals.

Scalars are :class:`fractions.Fraction` throughout. Series are stored by
their exponential coefficients, i.e. the terms ``a_n`` of
``sum a_n z^n / n!``, so that sequence values can be compared against
series terms directly.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Sequence, Union

from .errors import CompositionDomainError, OrderMismatchError, SeriesUnderflowError

Rational = Fraction
Scalar = Union[int, Fraction]


def _q(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


class Polynomial:
    """Dense univariate polynomial in ``x`` with rational coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``. Trailing zeros are trimmed,
    so two polynomials are equal iff their coefficient tuples are.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_q(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def linear(cls, c0: Scalar, c1: Scalar) -> "Polynomial":
        return cls([c0, c1])

    @property
    def degree(self) -> int | None:
        """Degree, or ``None`` for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else Fraction(0)

    def __call__(self, v: Scalar) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * v + c
        return acc

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale(self, c: Scalar) -> "Polynomial":
        c = _q(c)
        return Polynomial(c * a for a in self.coeffs)

    def shift(self, c: Scalar) -> "Polynomial":
        """Return ``p(x + c)``."""
        c = _q(c)
        n = len(self.coeffs)
        out = [Fraction(0)] * n
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            # a * (x + c)^i
            cp = Fraction(1)
            for j in range(i, -1, -1):
                out[j] += a * comb(i, j) * cp
                cp *= c
        return Polynomial(out)

    def compose(self, inner: "Polynomial") -> "Polynomial":
        """Return ``p(inner(x))`` by Horner's rule."""
        acc = Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def reflect(self) -> "Polynomial":
        """Return ``p(-x)``."""
        return Polynomial(c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs))

    def derivative(self) -> "Polynomial":
        return Polynomial(i * c for i, c in enumerate(self.coeffs) if i)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial([other])
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_polynomial(self)


def format_rational(v: Scalar) -> str:
    v = _q(v)
    return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


def format_polynomial(p: Polynomial) -> str:
    """Human-readable form, lowest degree first: ``1/2 - x + 3/2*x^2``."""
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for i, c in enumerate(p.coeffs):
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = format_rational(mag)
        else:
            mono = "x" if i == 1 else f"x^{i}"
            body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"+ {body}" if c > 0 else f"- {body}")
    return " ".join(parts)


def poly_eval(p: Polynomial, v: Scalar) -> Fraction:
    return p(v)


def poly_compose_shift(p: Polynomial, c: Scalar) -> Polynomial:
    return p.shift(c)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return p + q


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def poly_scale(p: Polynomial, c: Scalar) -> Polynomial:
    return p.scale(c)


# ---------------------------------------------------------------------------
# Truncated exponential generating functions


@dataclass(frozen=True)
class EgfSeries:
    """``sum_{n<=order} terms[n] z^n/n! + O(z^(order+1))``."""

    terms: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.terms:
            raise ValueError("EgfSeries needs at least one term")
        object.__setattr__(self, "terms", tuple(_q(t) for t in self.terms))

    @property
    def order(self) -> int:
        return len(self.terms) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self.terms[n]

    def __len__(self):
        return len(self.terms)

    def __add__(self, other: "EgfSeries") -> "EgfSeries":
        _same_order(self, other)
        return EgfSeries(tuple(a + b for a, b in zip(self.terms, other.terms)))

    def __sub__(self, other: "EgfSeries") -> "EgfSeries":
        _same_order(self, other)
        return EgfSeries(tuple(a - b for a, b in zip(self.terms, other.terms)))

    def __neg__(self):
        return EgfSeries(tuple(-a for a in self.terms))

    def __mul__(self, other):
        if isinstance(other, EgfSeries):
            return series_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return series_scale(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def truncate(self, order: int) -> "EgfSeries":
        if order > self.order:
            raise SeriesUnderflowError(f"cannot extend order {self.order} series to {order}")
        return EgfSeries(self.terms[: order + 1])

    def to_ordinary(self) -> list[Fraction]:
        """Taylor coefficients ``a_n / n!``."""
        return [t / factorial(n) for n, t in enumerate(self.terms)]

    @classmethod
    def from_ordinary(cls, coeffs: Sequence[Scalar]) -> "EgfSeries":
        return cls(tuple(_q(c) * factorial(n) for n, c in enumerate(coeffs)))


def _same_order(f: EgfSeries, g: EgfSeries) -> None:
    if f.order != g.order:
        raise OrderMismatchError(f"series orders differ: {f.order} vs {g.order}")


def series_one(order: int) -> EgfSeries:
    return EgfSeries((Fraction(1),) + (Fraction(0),) * order)


def series_z(order: int) -> EgfSeries:
    """The series of ``z`` itself."""
    terms = [Fraction(0)] * (order + 1)
    if order >= 1:
        terms[1] = Fraction(1)
    return EgfSeries(tuple(terms))


def series_scale(f: EgfSeries, c: Scalar) -> EgfSeries:
    c = _q(c)
    return EgfSeries(tuple(c * a for a in f.terms))


def series_mul(f: EgfSeries, g: EgfSeries) -> EgfSeries:
    """Binomial convolution ``h_n = sum_i C(n,i) f_i g_{n-i}``."""
    _same_order(f, g)
    ft, gt = f.terms, g.terms
    out = []
    for n in range(f.order + 1):
        acc = Fraction(0)
        for i in range(n + 1):
            if ft[i] and gt[n - i]:
                acc += comb(n, i) * ft[i] * gt[n - i]
        out.append(acc)
    return EgfSeries(tuple(out))


def series_pow(f: EgfSeries, e: int) -> EgfSeries:
    if e < 0:
        raise ValueError("negative series power")
    result = series_one(f.order)
    for _ in range(e):
        result = series_mul(result, f)
    return result


def series_exp_linear(c: Scalar, order: int) -> EgfSeries:
    """EGF of ``exp(c z)``: terms ``c**n``."""
    if order < 0:
        raise ValueError("order must be non-negative")
    c = _q(c)
    return EgfSeries(tuple(c**n for n in range(order + 1)))


def series_derive(f: EgfSeries) -> EgfSeries:
    if f.order < 1:
        raise SeriesUnderflowError("cannot differentiate an order-0 series")
    return EgfSeries(f.terms[1:])


def series_compose(outer: Sequence[Scalar], inner: EgfSeries) -> EgfSeries:
    """EGF of ``sum_i outer[i] * inner(z)**i``.

    ``outer`` holds ordinary power-series coefficients; entries beyond
    ``inner.order`` cannot contribute and missing ones count as zero.
    """
    if inner.terms[0] != 0:
        raise CompositionDomainError("inner series must have zero constant term")
    N = inner.order
    w = inner.to_ordinary()
    out = [Fraction(0)] * (N + 1)
    power = [Fraction(1)] + [Fraction(0)] * N  # w^0
    for i in range(min(len(outer), N + 1)):
        c = _q(outer[i])
        if c:
            for n in range(i, N + 1):
                out[n] += c * power[n]
        # power *= w, truncated; w has valuation >= 1
        nxt = [Fraction(0)] * (N + 1)
        for a in range(N + 1):
            if power[a]:
                for b in range(1, N + 1 - a):
                    if w[b]:
                        nxt[a + b] += power[a] * w[b]
        power = nxt
    return EgfSeries.from_ordinary(out)


def _apply_exp_derivative(f: EgfSeries, m: int, c: int) -> EgfSeries:
    if m < 0:
        raise ValueError("operator power must be non-negative")
    if f.order < m:
        raise SeriesUnderflowError(f"order {f.order} series cannot absorb {m} derivatives")
    for _ in range(m):
        d = series_derive(f)
        f = series_mul(series_exp_linear(c, d.order), d)
    return f


def apply_ezd(f: EgfSeries, m: int) -> EgfSeries:
    """``(e^z d/dz)^m f``; the result has order ``f.order - m``."""
    return _apply_exp_derivative(f, m, 1)


def apply_emzd(f: EgfSeries, m: int) -> EgfSeries:
    """``(e^{-z} d/dz)^m f``; the result has order ``f.order - m``."""
    return _apply_exp_derivative(f, m, -1)


def one_minus_exp_neg(order: int) -> EgfSeries:
    """EGF of ``1 - e^{-z}``."""
    return series_one(order) - series_exp_linear(-1, order)


def exp_minus_one(order: int) -> EgfSeries:
    """EGF of ``e^z - 1``."""
    return series_exp_linear(1, order) - series_one(order)
