"""Seedable uniform generator for the simulator: SplitMix64, addressable.

Draw number d (0-based) of the stream for a given 64-bit seed is

    z = mix64((seed + (d + 1) * GAMMA) mod 2**64)
    u = ((z >> 11) + 1) * 2**-53          # in (0, 1], 53-bit resolution

with the standard SplitMix64 finalizer ``mix64`` and golden-ratio increment
GAMMA (this is the generator behind Java's SplittableRandom; it passes
BigCrush, which is ample statistical quality at the 1e7-sample scale used
here).  Because the state after d draws is just ``seed + d * GAMMA``, any
stream position can be reached in O(1).

The simulator assigns sample i the draws i*n .. i*n + n - 1, so a chunk
covering samples [lo, hi) starts at stream position lo*n regardless of how
many chunks exist or which thread runs it.  Success counts therefore depend
only on (seed, samples, n, k).

This algorithm is frozen: changing any constant or the (0, 1] mapping would
silently invalidate every recorded seed, so treat modifications as breaking.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15

_MULT1 = 0xBF58476D1CE4E5B9
_MULT2 = 0x94D049BB133111EB


def mix64(z: int) -> int:
    """SplitMix64 finalizer on a 64-bit value."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * _MULT1) & MASK64
    z = ((z ^ (z >> 27)) * _MULT2) & MASK64
    return z ^ (z >> 31)


def raw_draw(seed: int, index: int) -> int:
    """The index-th (0-based) 64-bit output of the stream for ``seed``."""
    return mix64(seed + (index + 1) * GAMMA)


def unit_draw(seed: int, index: int) -> float:
    """The index-th uniform draw in (0, 1].

    ((z >> 11) + 1) is at most 2**53, exactly representable as a double, and
    the 2**-53 scaling is exact, so this value is identical across the
    Python, NumPy and C implementations.
    """
    return ((raw_draw(seed, index) >> 11) + 1) * 2.0**-53
