"""Exact scalars and dense rational linear algebra.

Every closed-form probability and every piece of polytope geometry in this
package is exact: integers are Python's arbitrary-precision ``int``, fractions
are ``fractions.Fraction``, and the matrix routines below run Gaussian
elimination over Fraction entries.  Pivoting picks the first nonzero entry;
there is no numerical stability concern, only coefficient growth, and the
sizes involved (n <= ~12) keep that trivial.  Floating point appears only in
the Monte Carlo sampler and in display formatting.

All values are immutable after construction and safe to share across threads.
"""

from __future__ import annotations

import math
from decimal import ROUND_HALF_EVEN, Decimal, localcontext
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, Fraction]


class SingularMatrixError(ArithmeticError):
    """Elimination found no nonzero pivot: the system is singular."""


class InternalCheckError(RuntimeError):
    """A redundant internal cross-check failed.

    This never indicates bad user input; if it fires, the library itself is
    wrong and the failure should surface loudly (it is a test failure).
    """


def rat(num: Scalar, den: Scalar = 1) -> Fraction:
    """Reduced fraction with positive denominator.

    >>> rat(3, -6)
    Fraction(-1, 2)

    Raises ZeroDivisionError for a zero denominator.
    """
    return Fraction(num, den)


def format_exact(value: Scalar) -> str:
    """Render a rational as ``num/den``, suppressing a unit denominator."""
    q = Fraction(value)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_approx(value: Scalar, digits: int = 12) -> str:
    """Decimal rendering at ``digits`` significant digits, round-half-even.

    Exact decimal division is used (no detour through binary floats), so the
    output is correctly rounded for any denominator size.  Locale independent:
    always a decimal point, never grouping separators.
    """
    if digits < 1:
        raise ValueError(f"digits >= 1 required, got {digits}")
    q = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        ctx.rounding = ROUND_HALF_EVEN
        d = Decimal(q.numerator) / Decimal(q.denominator)
    return str(d)


class Matrix:
    """Immutable dense matrix of fractions, row-major."""

    __slots__ = ("rows", "cols", "_data")

    def __init__(self, entries: Iterable[Iterable[Scalar]]):
        data = tuple(tuple(Fraction(x) for x in row) for row in entries)
        if not data or not data[0]:
            raise ValueError("matrix needs at least one row and one column")
        if any(len(row) != len(data[0]) for row in data):
            raise ValueError("all rows must have the same length")
        self.rows = len(data)
        self.cols = len(data[0])
        self._data = data

    @classmethod
    def identity(cls, n: int) -> "Matrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def entry(self, i: int, j: int) -> Fraction:
        return self._data[i][j]

    def row(self, i: int) -> tuple[Fraction, ...]:
        return self._data[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self._data == other._data

    def __hash__(self) -> int:
        return hash(self._data)

    def __repr__(self) -> str:
        body = ", ".join("[" + ", ".join(format_exact(x) for x in row) + "]" for row in self._data)
        return f"Matrix([{body}])"

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = range(other.cols)
        return Matrix(
            [[sum(a * other._data[t][j] for t, a in enumerate(row)) for j in cols] for row in self._data]
        )

    def mul_vector(self, v: Sequence[Scalar]) -> tuple[Fraction, ...]:
        if len(v) != self.cols:
            raise ValueError(f"vector length {len(v)} does not match {self.cols} columns")
        vv = [Fraction(x) for x in v]
        return tuple(sum(a * x for a, x in zip(row, vv)) for row in self._data)

    def _require_square(self, what: str) -> int:
        if self.rows != self.cols:
            raise ValueError(f"{what} requires a square matrix, got {self.rows}x{self.cols}")
        return self.rows

    def det(self) -> Fraction:
        """Exact determinant by rational elimination, first-nonzero pivot."""
        n = self._require_square("determinant")
        a = [list(row) for row in self._data]
        result = Fraction(1)
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                return Fraction(0)
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                result = -result
            pivot = a[col][col]
            result *= pivot
            for r in range(col + 1, n):
                f = a[r][col]
                if f:
                    f /= pivot
                    for c in range(col, n):
                        a[r][c] -= f * a[col][c]
        return result

    def solve(self, rhs: Sequence[Scalar]) -> tuple[Fraction, ...]:
        """Exact solution of ``self @ x = rhs``.

        Raises SingularMatrixError when elimination finds no pivot.  Under
        ``__debug__`` the solution is verified by back-substitution, which is
        exact, so any mismatch is a genuine bug (InternalCheckError).
        """
        n = self._require_square("solve")
        b = [Fraction(x) for x in rhs]
        if len(b) != n:
            raise ValueError(f"rhs length {len(b)} does not match {n} rows")
        a = [list(row) + [b[i]] for i, row in enumerate(self._data)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise SingularMatrixError(f"no pivot available in column {col}")
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
            pivot = a[col][col]
            for r in range(col + 1, n):
                f = a[r][col]
                if f:
                    f /= pivot
                    for c in range(col, n + 1):
                        a[r][c] -= f * a[col][c]
        x = [Fraction(0)] * n
        for i in range(n - 1, -1, -1):
            acc = a[i][n]
            for j in range(i + 1, n):
                acc -= a[i][j] * x[j]
            x[i] = acc / a[i][i]
        solution = tuple(x)
        if __debug__ and self.mul_vector(solution) != tuple(b):
            raise InternalCheckError("solve verification by substitution failed")
        return solution

    def inverse(self) -> "Matrix":
        """Exact inverse by Gauss-Jordan elimination on [self | I]."""
        n = self._require_square("inverse")
        a = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(self._data)]
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col] != 0), None)
            if piv is None:
                raise SingularMatrixError(f"no pivot available in column {col}")
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
            pivot = a[col][col]
            if pivot != 1:
                a[col] = [x / pivot for x in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    f = a[r][col]
                    for c in range(col, 2 * n):
                        a[r][c] -= f * a[col][c]
        return Matrix([row[n:] for row in a])


def det(m: Matrix) -> Fraction:
    """Exact determinant of a square matrix."""
    return m.det()


def solve(m: Matrix, rhs: Sequence[Scalar]) -> tuple[Fraction, ...]:
    """Exact solution of ``m @ x = rhs`` for square nonsingular ``m``."""
    return m.solve(rhs)


def factorial(n: int) -> int:
    return math.factorial(n)
