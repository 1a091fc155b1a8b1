"""Closed-form counts: Euler characteristics, their generating series, free-module ranks."""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .graph import Graph


def multiset_count(n: int, m: int) -> int:
    """Number of monomials of degree ``m`` in ``n`` variables.

    Equals C(m + n - 1, n - 1) for n >= 1; with no variables only the
    constant monomial exists.

    >>> multiset_count(3, 2), multiset_count(0, 0), multiset_count(0, 1), multiset_count(4, -1)
    (6, 1, 0, 0)
    """
    if m < 0 or n < 0:
        return 0
    if n == 0:
        return 1 if m == 0 else 0
    return comb(m + n - 1, n - 1)


def euler_characteristic(g: Graph, k: int) -> int:
    """χ(B_k(Γ)) = Σ_{U⊆V} (-1)^|U| C(k-|U|+|E|-1, |E|-1) Π_{v∈U} (d(v)-1).

    Subsets are grouped by size through the polynomial Π_v (1 - (d(v)-1) x).
    """
    if k < 0:
        raise ValueError("weight must be nonnegative")
    coeffs = [1]
    for d in g.degrees():
        nxt = coeffs + [0]
        for j, c in enumerate(coeffs):
            nxt[j + 1] -= (d - 1) * c
        coeffs = nxt
    ne = g.num_edges
    return sum(c * multiset_count(ne, k - j) for j, c in enumerate(coeffs))


def _generalized_binomial_series(alpha: Fraction, n: int) -> list[Fraction]:
    """Coefficients of (1 - t)^alpha up to t^n."""
    out = [Fraction(1)]
    c = Fraction(1)
    for j in range(1, n + 1):
        c = c * (alpha - j + 1) / j
        out.append(c * (-1) ** j)
    return out


def _mul_truncated(a: Sequence, b: Sequence, n: int) -> list:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                out[i + j] += x * y
    return out


def euler_poincare_coeffs(g: Graph, k_max: int) -> list[int]:
    """Coefficients of Π_v (1 + t(1 - d(v))) / (1 - t)^(d(v)/2) through t^k_max."""
    series: list = [Fraction(1)] + [Fraction(0)] * k_max
    for d in g.degrees():
        factor = _mul_truncated([1, 1 - d], _generalized_binomial_series(Fraction(-d, 2), k_max), k_max)
        series = _mul_truncated(series, factor, k_max)
    out = []
    for c in series:
        if c.denominator != 1:
            raise ArithmeticError(f"non-integral series coefficient {c}")
        out.append(int(c))
    return out


def euler_sequence(g: Graph, k_max: int) -> list[int]:
    return [euler_characteristic(g, k) for k in range(k_max + 1)]


def cauchy_product(a: Sequence[int], b: Sequence[int]) -> list[int]:
    n = min(len(a), len(b)) - 1
    return _mul_truncated(a, b, n)


def free_module_rank(num_edges: int, generator_weights: Iterable[int], k: int) -> int:
    """Rank in weight k of a free Z[E]-module with generators of the given weights.

    >>> free_module_rank(6, [6], 7)
    6
    """
    return sum(multiset_count(num_edges, k - w) for w in generator_weights)
