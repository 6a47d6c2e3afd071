"""Deterministic PRNG stream derivation.

A single 64-bit master seed plus an integer key tuple identifies every
random stream in the package.  Streams derived with distinct keys are
statistically independent, and the derivation is stable across platforms,
so batched / parallel execution reproduces a sequential run exactly as
long as the same keys are used.

``numpy.random.Generator`` objects are the explicit PRNG state: they are
created here, passed into sampling routines, and advanced in place.
Nothing in the package touches a global generator.
"""

from __future__ import annotations

import numpy as np


def generator(seed: int, *key: int) -> np.random.Generator:
    """PCG64 generator for stream ``key`` under the given master seed."""
    ss = np.random.SeedSequence(int(seed), spawn_key=tuple(int(k) for k in key))
    return np.random.Generator(np.random.PCG64(ss))
