"""Deterministic random streams and run-seed derivation."""

import hashlib
from typing import Union

import numpy as np

SEED_MASK = (1 << 64) - 1


def derive_seed(master_seed: int, problem_id: str, algorithm_id: str, run_index: int) -> int:
    """Derive the 64-bit seed of one run.

    seed = first 8 bytes (big endian) of BLAKE2b over
    "<master_seed>|<problem_id>|<algorithm_id>|<run_index>". Stable across
    processes and Python versions, unlike hash().
    """
    key = f"{int(master_seed)}|{problem_id}|{algorithm_id}|{int(run_index)}"
    digest = hashlib.blake2b(key.encode("utf-8"), digest_size=8).digest()
    return int.from_bytes(digest, "big") & SEED_MASK


def make_rng(seed: Union[int, np.random.SeedSequence]) -> np.random.Generator:
    """Create the PCG64-backed stream used by every stochastic component."""
    if isinstance(seed, np.random.SeedSequence):
        return np.random.Generator(np.random.PCG64(seed))
    return np.random.Generator(np.random.PCG64(int(seed) & SEED_MASK))
