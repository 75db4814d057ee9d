"""Closed-form probabilities that no k-gon can be built from n random sticks.

For n stick lengths drawn independently and uniformly from [0,1], the
probability that no k of them close into a (possibly degenerate) polygon is
the reciprocal of a product of k-bonacci-style sequence terms.  Two
equivalent product shapes exist (``p_formula1`` and ``p_formula2``); the
default entry point ``p_auto`` evaluates both and insists on exact agreement,
turning the identity between them into a runtime assertion.

Special cases collapse to factorials: k = n gives 1/(n-1)! and k = n-1 gives
1/((2n-5) * 2**(n-3) * (n-3)!).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .exactmath import InternalCheckError, format_approx, format_exact
from .sequences import s_spec, t_spec


@dataclass(frozen=True)
class Problem:
    """The instance (n, k): n sticks, polygons with k sides, 3 <= k <= n."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"n >= 3 violated: n={self.n}")
        if self.k < 3:
            raise ValueError(f"k >= 3 violated: k={self.k}")
        if self.k > self.n:
            raise ValueError(f"k <= n violated: k={self.k} > n={self.n}")


@dataclass(frozen=True)
class Probability:
    """An exact probability in (0, 1].

    For this problem family the value is always a unit fraction (numerator
    1); that is asserted by the test suite rather than enforced here.
    """

    value: Fraction

    def __post_init__(self):
        if not 0 < self.value <= 1:
            raise ValueError(f"probability must be in (0, 1], got {self.value}")

    def __float__(self) -> float:
        return float(self.value)

    def __str__(self) -> str:
        return format_exact(self.value)

    def approx(self, digits: int = 12) -> str:
        return format_approx(self.value, digits)


def p_formula1(prob: Problem) -> Probability:
    """First product shape.

    The denominator takes every zero-one family at index n, then a tail of
    t_spec(k, k-1) values at n-1 down to k-1:

        prod(t_spec(k, ell).term(n) for ell in 1..k-1)
        * prod(t_spec(k, k-1).term(n-i) for i in 1..n-k+1)
    """
    n, k = prob.n, prob.k
    denom = 1
    for ell in range(1, k):
        denom *= t_spec(k, ell).term(n)
    tail = t_spec(k, k - 1)
    for i in range(1, n - k + 2):
        denom *= tail.term(n - i)
    return Probability(Fraction(1, denom))


def p_formula2(prob: Problem) -> Probability:
    """Second product shape, trading the tail for the doubling-seeded family.

        prod(t_spec(k, ell).term(n) for ell in 1..k-3)
        * prod(s_spec(k).term(i) for i in 1..n-k+3)

    The first product is empty (equal to 1) when k = 3.
    """
    n, k = prob.n, prob.k
    denom = 1
    for ell in range(1, k - 2):
        denom *= t_spec(k, ell).term(n)
    s = s_spec(k)
    for i in range(1, n - k + 4):
        denom *= s.term(i)
    return Probability(Fraction(1, denom))


def p_auto(prob: Problem) -> Probability:
    """Default entry point: both product shapes, cross-checked exactly.

    A disagreement raises InternalCheckError; it can only mean a bug in the
    sequence engine or the products, never bad input.
    """
    first = p_formula1(prob)
    second = p_formula2(prob)
    if first.value != second.value:
        raise InternalCheckError(
            f"product shapes disagree at (n={prob.n}, k={prob.k}): {first} vs {second}"
        )
    return first


def p_ngon(n: int) -> Probability:
    """The k = n boundary: probability exactly 1/(n-1)!."""
    if n < 3:
        raise ValueError(f"n >= 3 required, got {n}")
    return Probability(Fraction(1, math.factorial(n - 1)))


def p_n_minus_1_gon(n: int) -> Probability:
    """The k = n-1 boundary: probability exactly 1/((2n-5) * 2**(n-3) * (n-3)!)."""
    if n < 4:
        raise ValueError(f"n >= 4 required, got {n}")
    return Probability(Fraction(1, (2 * n - 5) * 2 ** (n - 3) * math.factorial(n - 3)))
