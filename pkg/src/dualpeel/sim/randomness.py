"""Counter-based seeding.

Each trial draws from a generator keyed by ``(master seed, *counters)``, so a
trial's randomness does not depend on which trials ran before it.
"""

from __future__ import annotations

import numpy as np


def trial_sequence(master_seed: int, *key: int) -> np.random.SeedSequence:
    return np.random.SeedSequence(master_seed, spawn_key=key)


def trial_rng(master_seed: int, *key: int) -> np.random.Generator:
    return np.random.default_rng(trial_sequence(master_seed, *key))


def trial_seed(master_seed: int, *key: int) -> int:
    """A 32-bit seed standing for the trial in reports and tie-breaking."""
    return int(trial_sequence(master_seed, *key).generate_state(1)[0])
