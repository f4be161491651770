"""Deterministic RNG substreams derived from one master seed.

Every stochastic operation in the toolkit draws from a substream keyed by
(master seed, purpose tag, index...). Substreams are independent of each
other and of execution order, so parallel schedules cannot change results.
"""

from __future__ import annotations

import numpy as np

# Purpose tags keep substreams from colliding across subsystems.
BOOT_WEIGHTS = 1
SIM_TRUE_MODEL = 2
SIM_NOISE = 3
SIM_FIT = 4
SFD_POINTS = 5


def substream(seed: int, *key: int) -> np.random.Generator:
    """Return a fresh generator for the substream identified by `key`."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(key)))


def derive_seed(seed: int, *key: int) -> int:
    """Collapse (seed, key...) into a single integer usable as a master seed."""
    state = np.random.SeedSequence(seed, spawn_key=tuple(key)).generate_state(1, np.uint64)
    return int(state[0])
