"""Reproducible Monte Carlo seeding.

Every replica gets its own counter-based generator keyed by
(master seed, replica index), so results depend only on the seed and the
number of replicas, never on how replicas are scheduled or batched.
Reductions run in fixed replica order.
"""
from __future__ import annotations

import numpy as np

from .errors import InputError

_U64 = (1 << 64) - 1


def check_seed(seed: int) -> int:
    if not isinstance(seed, int) or isinstance(seed, bool):
        raise InputError(f"seed must be an integer, got {seed!r}")
    if not (0 <= seed <= _U64):
        raise InputError(f"seed must fit in 64 unsigned bits, got {seed}")
    return seed


def replica_rng(master_seed: int, replica: int) -> np.random.Generator:
    """Independent generator for one replica: 128-bit Philox key
    (master seed in the low word, replica index in the high word)."""
    check_seed(master_seed)
    if replica < 0:
        raise InputError(f"replica index must be >= 0, got {replica}")
    key = master_seed | (replica << 64)
    return np.random.Generator(np.random.Philox(key=key))
