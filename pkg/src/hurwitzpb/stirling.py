"""Classical Stirling-type numbers, Lah numbers and factorial helpers.

The triangles for ``s(n, i)`` and ``S(n, i)`` are built from their
recurrences and memoized by row. Explicit alternating-sum forms are kept
alongside so each value has an independent second route.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .algebra import Polynomial, Scalar, _q


def binomial(n: int, k: int) -> int:
    """Binomial coefficient with integer (possibly negative) upper index.

    For ``n >= 0`` this is ``0`` outside ``0 <= k <= n``; for ``n < 0`` the
    falling-factorial form is used, so ``binomial(-1, 0) == 1``.
    """
    if k < 0:
        return 0
    if n >= 0:
        return comb(n, k) if k <= n else 0
    num = 1
    for t in range(k):
        num *= n - t
    return num // factorial(k)


def pochhammer(v: Scalar, n: int):
    """Rising factorial ``v (v+1) ... (v+n-1)``; ``(v)_0 = 1``."""
    if n < 0:
        raise ValueError("pochhammer length must be non-negative")
    acc = 1 if isinstance(v, int) else Fraction(1)
    for t in range(n):
        acc *= v + t
    return acc


def falling_factorial(v: Scalar, n: int):
    acc = 1 if isinstance(v, int) else Fraction(1)
    for t in range(n):
        acc *= v - t
    return acc


@lru_cache(maxsize=None)
def _first_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _first_row(n - 1)
    m = n - 1
    # s(n, i) = s(n-1, i-1) - (n-1) s(n-1, i)
    row = [0] * (n + 1)
    for i in range(1, n + 1):
        left = prev[i - 1]
        here = prev[i] if i <= m else 0
        row[i] = left - m * here
    return tuple(row)


@lru_cache(maxsize=None)
def _second_row(n: int) -> tuple[int, ...]:
    if n == 0:
        return (1,)
    prev = _second_row(n - 1)
    row = [0] * (n + 1)
    for i in range(1, n + 1):
        here = prev[i] if i <= n - 1 else 0
        row[i] = prev[i - 1] + i * here
    return tuple(row)


def _warm(rowfn, n: int) -> None:
    # fill bottom-up so the recursion never goes deep
    for r in range(n + 1):
        rowfn(r)


def stirling_first_row(n: int) -> tuple[int, ...]:
    _warm(_first_row, n)
    return _first_row(n)


def stirling_second_row(n: int) -> tuple[int, ...]:
    _warm(_second_row, n)
    return _second_row(n)


def stirling_first(n: int, i: int) -> int:
    """Signed Stirling number of the first kind ``s(n, i)``."""
    if n < 0 or i < 0 or i > n:
        return 0
    return stirling_first_row(n)[i]


def stirling_second(n: int, i: int) -> int:
    """Stirling number of the second kind ``S(n, i)``."""
    if n < 0 or i < 0 or i > n:
        return 0
    return stirling_second_row(n)[i]


def stirling_second_explicit(n: int, i: int) -> int:
    if n < 0 or i < 0:
        return 0
    total = sum((-1) ** (i - j) * comb(i, j) * j**n for j in range(i + 1))
    q, r = divmod(total, factorial(i))
    assert r == 0
    return q


def stirling_first_triangle(rows: int) -> list[tuple[int, ...]]:
    return [stirling_first_row(n) for n in range(rows + 1)]


def stirling_second_triangle(rows: int) -> list[tuple[int, ...]]:
    return [stirling_second_row(n) for n in range(rows + 1)]


def weighted_stirling(n: int, i: int, x: Scalar) -> Fraction:
    """Weighted Stirling number of the second kind, ``(1/i!) Delta^i x^n``."""
    if n < 0 or i < 0:
        return Fraction(0)
    x = _q(x)
    total = Fraction(0)
    for j in range(i + 1):
        total += (-1) ** (i - j) * comb(i, j) * (x + j) ** n
    return total / factorial(i)


def weighted_stirling_poly(n: int, i: int) -> Polynomial:
    """``(1/i!) Delta^i x^n`` as a polynomial in ``x``."""
    if n < 0 or i < 0 or i > n:
        return Polynomial()
    xn = Polynomial([0] * n + [1])
    total = Polynomial()
    for j in range(i + 1):
        total = total + xn.shift(j).scale((-1) ** (i - j) * comb(i, j))
    return total.scale(Fraction(1, factorial(i)))


def r_stirling(n: int, i: int, r: int) -> int:
    """r-Stirling number ``{n+r, i+r}_r``, indexed by the shifted ``(n, i)``."""
    if r < 0:
        raise ValueError("r must be non-negative")
    v = weighted_stirling(n, i, r)
    assert v.denominator == 1
    return v.numerator


def lah(m: int, k: int) -> int:
    """Unsigned Lah number ``(m!/k!) C(m-1, k-1)``, with ``lah(0, 0) = 1``."""
    if m < 0 or k < 0:
        return 0
    if k == 0:
        return 1 if m == 0 else 0
    if k > m:
        return 0
    return factorial(m) // factorial(k) * comb(m - 1, k - 1)
