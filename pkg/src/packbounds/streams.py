"""Counter-based random streams for reproducible estimation.

Streams are Philox generators keyed by (seed, index...), so any worker can
open the stream for its stratum independently and the draws never depend on
scheduling.  Mixing uses splitmix64 so that nearby seeds give unrelated keys.
"""

from __future__ import annotations

import numpy as np

__all__ = ["mix", "substream", "spawn_key"]

_MASK = (1 << 64) - 1


def mix(*words: int) -> int:
    """Fold integer words into one 64-bit key (splitmix64 finalizer chain)."""
    acc = 0x9E3779B97F4A7C15
    for w in words:
        acc = (acc + (int(w) & _MASK)) & _MASK
        z = acc
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        acc = z ^ (z >> 31)
    return acc


def spawn_key(seed: int, *indices: int) -> int:
    """Derive a child seed for a named sub-computation."""
    return mix(seed, *indices)


def substream(seed: int, *indices: int) -> np.random.Generator:
    """Open the deterministic stream for (seed, indices...)."""
    return np.random.Generator(np.random.Philox(key=mix(seed, *indices)))
