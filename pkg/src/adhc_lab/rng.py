"""Seeded random streams.

All randomness goes through numpy's PCG64 bit generator seeded by a
``SeedSequence``. Child streams are derived by extending the entropy tuple,
so ``stream(seed, i)`` is stable no matter how many siblings are drawn.
"""

from __future__ import annotations

import numpy as np

RNG_ALGORITHM = "numpy.PCG64/SeedSequence"


def stream(seed: int, *path: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, *path])))


def derive_seed(seed: int, *path: int) -> int:
    """A 64-bit integer seed for the child stream at ``path``."""
    state = np.random.SeedSequence([seed, *path]).generate_state(2, dtype=np.uint32)
    return int(state[0]) << 32 | int(state[1])
