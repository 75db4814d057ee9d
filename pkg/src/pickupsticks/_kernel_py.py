"""NumPy fallback for the sampling kernel.

Bit-compatible with the compiled kernel in ``_kernel_cy``: same SplitMix64
stream (uint64 arithmetic wraps mod 2**64 exactly like C), same (0, 1]
mapping, and window sums accumulated left to right so every float operation
happens in the same order.  Success counts are therefore identical whichever
kernel is active; the test suite asserts this.
"""

from __future__ import annotations

import numpy as np

from .rng import GAMMA, MASK64, unit_draw

COMPILED = False

_BLOCK = 1 << 15

_GAMMA = np.uint64(GAMMA)
_MULT1 = np.uint64(0xBF58476D1CE4E5B9)
_MULT2 = np.uint64(0x94D049BB133111EB)
_SCALE = 2.0**-53


def _units(first_draw: int, count: int, seed: int) -> np.ndarray:
    """Uniform draws at stream positions first_draw .. first_draw+count-1."""
    idx = np.arange(count, dtype=np.uint64) + np.uint64(first_draw & MASK64)
    with np.errstate(over="ignore"):
        z = np.uint64(seed & MASK64) + (idx + np.uint64(1)) * _GAMMA
        z = (z ^ (z >> np.uint64(30))) * _MULT1
        z = (z ^ (z >> np.uint64(27))) * _MULT2
        z ^= z >> np.uint64(31)
    return ((z >> np.uint64(11)) + np.uint64(1)).astype(np.float64) * _SCALE


def uniforms(seed: int, first_draw: int, count: int) -> list[float]:
    """The ``count`` draws starting at stream position ``first_draw``."""
    return _units(first_draw, count, seed).tolist()


def count_no_kgon(seed: int, n: int, k: int, first_sample: int, num_samples: int) -> int:
    """Samples in [first_sample, first_sample + num_samples) with no k-gon.

    Sample i consumes draws i*n .. i*n + n - 1; a k-gon forms iff some window
    of k consecutive sorted lengths has its k-1 smaller members summing to at
    least the largest.
    """
    if not 3 <= k <= n:
        raise ValueError(f"3 <= k <= n required, got k={k}, n={n}")
    successes = 0
    done = 0
    while done < num_samples:
        block = min(_BLOCK, num_samples - done)
        first_draw = ((first_sample + done) * n) & MASK64
        u = _units(first_draw, block * n, seed).reshape(block, n)
        u.sort(axis=1)
        formable = np.zeros(block, dtype=bool)
        for i in range(n - k + 1):
            s = u[:, i].copy()
            for j in range(i + 1, i + k - 1):
                s += u[:, j]
            formable |= s >= u[:, i + k - 1]
        successes += block - int(np.count_nonzero(formable))
        done += block
    return successes


def count_no_kgon_scalar(seed: int, n: int, k: int, first_sample: int, num_samples: int) -> int:
    """Plain-Python reference of the same count; slow, used to pin the kernels."""
    if not 3 <= k <= n:
        raise ValueError(f"3 <= k <= n required, got k={k}, n={n}")
    successes = 0
    base = first_sample * n
    for i in range(num_samples):
        lengths = sorted(unit_draw(seed, base + i * n + j) for j in range(n))
        formable = False
        for w in range(n - k + 1):
            s = lengths[w]
            for j in range(w + 1, w + k - 1):
                s += lengths[j]
            if s >= lengths[w + k - 1]:
                formable = True
                break
        if not formable:
            successes += 1
    return successes
