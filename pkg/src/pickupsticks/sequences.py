"""Generalized Fibonacci sequences ("k-bonacci") with 1-based indexing.

Two families drive all the closed-form probabilities in this package, both
linear recurrences of order k-1 (each term is the sum of the previous k-1):

* ``t_spec(k, ell)``: initial terms are ell-1 zeros followed by ones up to
  index k-1.  For k=3 these are Fibonacci-like; ``t_spec(3, 1)`` is the
  Fibonacci numbers 1, 1, 2, 3, 5, ...
* ``s_spec(k)``: initial terms 1, 1, 2, 4, ..., 2**(k-3).  For k=3 this is
  again Fibonacci; for k=4 it is the tribonacci sequence 1, 1, 2, 4, 7, 13.

Indexing is 1-based everywhere; off-by-one slips are the dominant bug risk,
so index 0 is rejected rather than reinterpreted.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional


class SequenceSpec:
    """A linear recurrence of a given order with explicit initial terms.

    Computed terms are cached per instance (append-only), so repeated queries
    are cheap: the acceptance suites hammer the same few specs.  Extension of
    the cache is serialized by a lock; reads of already-computed terms are
    lock-free.  Externally the object behaves as immutable.
    """

    __slots__ = ("order", "initial", "_terms", "_lock")

    def __init__(self, order: int, initial):
        initial = tuple(int(x) for x in initial)
        if order < 2:
            raise ValueError(f"order >= 2 required, got {order}")
        if len(initial) != order:
            raise ValueError(f"need exactly {order} initial terms, got {len(initial)}")
        self.order = order
        self.initial = initial
        self._terms = list(initial)
        self._lock = threading.Lock()

    def term(self, n: int) -> int:
        """The term at 1-based index ``n``."""
        if n < 1:
            raise ValueError(f"indexing is 1-based, got n={n}")
        if n > len(self._terms):
            with self._lock:
                while len(self._terms) < n:
                    self._terms.append(sum(self._terms[-self.order:]))
        return self._terms[n - 1]

    def terms(self, count: int) -> list[int]:
        """The first ``count`` terms as a list."""
        if count < 1:
            raise ValueError(f"count >= 1 required, got {count}")
        self.term(count)
        return self._terms[:count]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SequenceSpec):
            return NotImplemented
        return self.order == other.order and self.initial == other.initial

    def __hash__(self) -> int:
        return hash((self.order, self.initial))

    def __repr__(self) -> str:
        return f"SequenceSpec(order={self.order}, initial={self.initial})"


@lru_cache(maxsize=None)
def t_spec(k: int, ell: int) -> SequenceSpec:
    """The zero-one seeded family: ell-1 zeros, then ones up to index k-1.

    Instances are shared via a cache so their term caches accumulate across
    callers.
    """
    if k < 3:
        raise ValueError(f"k >= 3 required, got {k}")
    if not 1 <= ell <= k - 1:
        raise ValueError(f"1 <= ell <= k-1 required, got ell={ell} for k={k}")
    return SequenceSpec(k - 1, tuple(0 if i < ell else 1 for i in range(1, k)))


@lru_cache(maxsize=None)
def s_spec(k: int) -> SequenceSpec:
    """The doubling-seeded family: 1, 1, 2, 4, ..., 2**(k-3)."""
    if k < 3:
        raise ValueError(f"k >= 3 required, got {k}")
    return SequenceSpec(k - 1, (1,) + tuple(2 ** (i - 2) for i in range(2, k)))


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of an identity sweep; counterexample is (n, lhs, rhs) or None."""

    ok: bool
    n_max: int
    counterexample: Optional[tuple[int, int, int]]


def check_k4_identity(n_max: int) -> IdentityReport:
    """Verify t_spec(4,1).term(n) == s_spec(4).term(n) - s_spec(4).term(n-2).

    The identity is what makes the k=4 probability expressible through the
    tribonacci numbers alone.  Checked for every 3 <= n <= n_max; the first
    counterexample, if any, is reported.
    """
    if n_max < 3:
        raise ValueError(f"n_max >= 3 required, got {n_max}")
    t41 = t_spec(4, 1)
    s4 = s_spec(4)
    for n in range(3, n_max + 1):
        lhs = t41.term(n)
        rhs = s4.term(n) - s4.term(n - 2)
        if lhs != rhs:
            return IdentityReport(False, n_max, (n, lhs, rhs))
    return IdentityReport(True, n_max, None)
