"""Deterministic, order-independent randomness for Monte-Carlo trials.

Counter-based Philox streams keyed by (seed, trial index): any trial can be
re-run in isolation or in parallel and draw exactly the same numbers.
"""

from __future__ import annotations

import numpy as np


def trial_stream(seed: int, trial: int) -> np.random.Generator:
    key = np.array([np.uint64(seed & 0xFFFFFFFFFFFFFFFF), np.uint64(trial)], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))
