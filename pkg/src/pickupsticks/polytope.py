"""The stick-length feasibility region and its exact volume, two ways.

The probability that no k-gon forms equals n! times the volume of the region
of vectors u in R^n with

    0 < u_1,   u_{i-1} < u_i  (2 <= i <= k-1),
    u_{i-k+1} + ... + u_{i-1} < u_i  (k <= i <= n),   u_n <= 1,

i.e. sorted stick lengths where every stick beats the sum of its k-1
predecessors (so no window closes into a polygon), capped at 1.

A unit-determinant, hence volume-preserving, change of variables sends the
region to a simplex whose vertices are reciprocal-scaled basis vectors; the
scales are sequence values, which is where the closed product form comes
from.  ``volume_oracle`` takes the opposite route: it enumerates the
region's vertices directly with exact linear algebra, never touching the
transform or the sequences, and so provides an independent check of the
closed formulas.

Strict versus closed senses: the region is defined with strict lower bounds,
but all volume computations use the closure (same measure).  ``membership``
preserves the exact senses.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .closedform import Problem
from .exactmath import InternalCheckError, Matrix, Scalar, SingularMatrixError
from .sequences import t_spec


class DegeneratePolytopeError(RuntimeError):
    """Vertex enumeration hit a singular subsystem or an infeasible candidate.

    For valid inputs the region is provably a simplex and this never fires;
    firing means a geometry regression and is treated as a test failure.
    """


@dataclass(frozen=True)
class Constraint:
    """One halfspace ``normal . u (<|<=) offset``."""

    normal: Tuple[Fraction, ...]
    offset: Fraction
    strict: bool

    def value(self, u: Sequence[Fraction]) -> Fraction:
        return sum(c * x for c, x in zip(self.normal, u))

    def holds(self, u: Sequence[Fraction]) -> bool:
        """Satisfaction with the exact sense (strict or not)."""
        v = self.value(u)
        return v < self.offset if self.strict else v <= self.offset

    def holds_closed(self, u: Sequence[Fraction]) -> bool:
        """Satisfaction of the closure (<=), used by the vertex enumeration."""
        return self.value(u) <= self.offset


@dataclass(frozen=True)
class HalfspaceSystem:
    """The region as dim+1 halfspaces in a fixed, documented order."""

    dim: int
    constraints: Tuple[Constraint, ...]


@dataclass(frozen=True)
class TransformPair:
    """Forward (u -> v) change of variables and its exact inverse (v -> u)."""

    forward: Matrix
    inverse: Matrix


@dataclass(frozen=True)
class SimplexVertices:
    """The image simplex: the origin plus one scaled basis vector per axis."""

    vertices: Tuple[Tuple[Fraction, ...], ...]


def build_system(prob: Problem) -> HalfspaceSystem:
    """The n+1 halfspaces, in fixed order.

    Order matters downstream ("drop constraint j" must be deterministic):
    first -u_1 <= 0, then u_{i-1} - u_i <= 0 for 2 <= i <= k-1, then the
    window constraints u_{i-k+1} + ... + u_{i-1} - u_i <= 0 for k <= i <= n,
    and finally the cap u_n <= 1.  Only the cap is non-strict.
    """
    n, k = prob.n, prob.k
    zero = Fraction(0)

    def normal(entries: dict[int, int]) -> Tuple[Fraction, ...]:
        return tuple(Fraction(entries.get(j, 0)) for j in range(1, n + 1))

    cons = [Constraint(normal({1: -1}), zero, True)]
    for i in range(2, k):
        cons.append(Constraint(normal({i - 1: 1, i: -1}), zero, True))
    for i in range(k, n + 1):
        entries = {j: 1 for j in range(i - k + 1, i)}
        entries[i] = -1
        cons.append(Constraint(normal(entries), zero, True))
    cons.append(Constraint(normal({n: 1}), Fraction(1), False))
    return HalfspaceSystem(n, tuple(cons))


def lemma_coeffs(prob: Problem, m: int) -> Tuple[Fraction, ...]:
    """Coefficients expressing u_m in the transformed variables v.

    Built purely from sequence evaluations, no matrix inversion: slot ell
    holds t_spec(k, ell).term(m) for ell <= k-1, slots k-1+i hold the tail
    t_spec(k, k-1).term(m-i), and everything past slot m is zero.  For
    m <= k-1 this degenerates to m leading ones.
    """
    n, k = prob.n, prob.k
    if not 1 <= m <= n:
        raise ValueError(f"1 <= m <= n required, got m={m} for n={n}")
    coeffs = [Fraction(0)] * n
    for ell in range(1, k):
        if ell <= m:
            coeffs[ell - 1] = Fraction(t_spec(k, ell).term(m))
    tail = t_spec(k, k - 1)
    for i in range(1, m - k + 2):
        coeffs[k - 2 + i] = Fraction(tail.term(m - i))
    return tuple(coeffs)


def build_transform(prob: Problem) -> TransformPair:
    """The unimodular change of variables and its inverse, cross-checked.

    Forward rows: v_1 = u_1, v_i = u_i - u_{i-1} for 2 <= i <= k-1, and
    v_i = u_i - (u_{i-k+1} + ... + u_{i-1}) for k <= i <= n; lower triangular
    with unit diagonal, so det = 1 and volume is preserved.

    The inverse is computed two independent ways, by exact elimination and by
    assembling ``lemma_coeffs`` rows, and the two must agree exactly
    (InternalCheckError otherwise; that is a bug, not an input error).
    """
    n, k = prob.n, prob.k
    rows = []
    for i in range(1, n + 1):
        row = [Fraction(0)] * n
        row[i - 1] = Fraction(1)
        if 2 <= i <= k - 1:
            row[i - 2] = Fraction(-1)
        elif i >= k:
            for j in range(i - k + 1, i):
                row[j - 1] = Fraction(-1)
        rows.append(row)
    forward = Matrix(rows)
    inv_elimination = forward.inverse()
    inv_sequences = Matrix([lemma_coeffs(prob, m) for m in range(1, n + 1)])
    if inv_elimination != inv_sequences:
        raise InternalCheckError(
            f"transform inverse mismatch at (n={n}, k={k}): elimination vs sequence rows"
        )
    return TransformPair(forward, inv_elimination)


def simplex_vertices(prob: Problem) -> SimplexVertices:
    """Vertices of the image simplex in v-coordinates.

    The origin, then e_j scaled by the reciprocal of the j-th coefficient of
    the u_n row (those coefficients are exactly the sequence values that end
    up in the closed product).
    """
    n = prob.n
    scales = lemma_coeffs(prob, n)
    verts = [tuple(Fraction(0) for _ in range(n))]
    for j in range(n):
        v = [Fraction(0)] * n
        v[j] = 1 / scales[j]
        verts.append(tuple(v))
    return SimplexVertices(tuple(verts))


def volume_closed(prob: Problem) -> Fraction:
    """Simplex volume from the closed product: 1/n! over the vertex scales.

    Satisfies n! * volume_closed(prob) == p_auto(prob).value.
    """
    vol = Fraction(1, math.factorial(prob.n))
    for scale in lemma_coeffs(prob, prob.n):
        vol /= scale
    return vol


def volume_oracle(prob: Problem) -> Fraction:
    """Independent exact volume by vertex enumeration.

    Drops each of the n+1 halfspaces in turn, solves the remaining n as
    equalities, verifies the candidate against the dropped halfspace's
    closure, and returns |det| of vertex differences over n!.  This path
    never touches the transform or the sequence families, which is the whole
    point: agreement with ``volume_closed`` checks the closed formulas
    through independent machinery.  Each candidate is validated even though
    the region is provably a simplex; a regression should fail loudly
    (DegeneratePolytopeError) rather than return garbage.

    Cost grows with exact-arithmetic solves; intended for n <= ~10.
    """
    system = build_system(prob)
    n = system.dim
    cons = system.constraints
    vertices = []
    for drop in range(n + 1):
        sub = Matrix([c.normal for i, c in enumerate(cons) if i != drop])
        rhs = [c.offset for i, c in enumerate(cons) if i != drop]
        try:
            candidate = sub.solve(rhs)
        except SingularMatrixError as exc:
            raise DegeneratePolytopeError(
                f"singular subsystem dropping constraint {drop} at (n={prob.n}, k={prob.k})"
            ) from exc
        if not cons[drop].holds_closed(candidate):
            raise DegeneratePolytopeError(
                f"candidate from dropping constraint {drop} violates it at (n={prob.n}, k={prob.k})"
            )
        vertices.append(candidate)
    # Base vertex convention: the solution from dropping the u_n <= 1 cap,
    # which for this region is the origin.
    base = vertices[n]
    diffs = Matrix([[vertices[i][j] - base[j] for j in range(n)] for i in range(n)])
    return abs(diffs.det()) / Fraction(math.factorial(n))


def membership(prob: Problem, u: Sequence[Scalar]) -> bool:
    """Exact-sense membership: strict lower halfspaces, closed cap u_n <= 1."""
    system = build_system(prob)
    point = [Fraction(x) for x in u]
    if len(point) != system.dim:
        raise ValueError(f"point has dimension {len(point)}, expected {system.dim}")
    return all(c.holds(point) for c in system.constraints)
