"""Seeded shift vectors and conditioned rotation matrices."""

from dataclasses import dataclass

import numpy as np

from core.errors import InvalidParameter
from core.rng import make_rng
from core.types import Domain


@dataclass(frozen=True)
class ShiftVector:
    """Shifted optimum o, regenerable from its seed."""
    o: np.ndarray
    seed: int


@dataclass(frozen=True)
class RotationMatrix:
    """Linear transform M = U S V^T with prescribed condition number."""
    matrix: np.ndarray
    condition_target: float
    seed: int


def generate_shift(n: int, domain: Domain, seed: int) -> ShiftVector:
    """Draw o uniformly inside the central 80% of every dimension's range."""
    if domain.dimension != n:
        raise InvalidParameter(f"Domain has {domain.dimension} dimensions, expected {n}")
    rng = make_rng(seed)
    o = domain.lower + domain.width * rng.uniform(0.1, 0.9, size=n)
    return ShiftVector(o, seed)


def _random_orthogonal(n: int, rng: np.random.Generator) -> np.ndarray:
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    # column signs from diag(R) make the factor Haar distributed
    signs = np.sign(np.diag(r))
    signs[signs == 0] = 1.0
    return q * signs


def generate_rotation(n: int, condition_target: float, seed: int) -> RotationMatrix:
    """
    Random linear map whose singular values run geometrically from 1 to the target.

    Args:
        n: Dimension
        condition_target: Ratio of largest to smallest singular value, >= 1
        seed: Generator seed

    Returns:
        RotationMatrix; orthogonal when condition_target == 1
    """
    if condition_target < 1.0:
        raise InvalidParameter(f"condition_target must be >= 1, got {condition_target}")
    rng = make_rng(seed)
    u = _random_orthogonal(n, rng)
    v = _random_orthogonal(n, rng)
    singular = np.geomspace(1.0, condition_target, n) if n > 1 else np.ones(1)
    return RotationMatrix((u * singular) @ v.T, float(condition_target), seed)
