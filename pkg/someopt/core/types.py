"""Foundational value types: candidates, box domains and problems."""

import sys
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import DimensionMismatch, InvalidParameter

# Largest double; stands in for infinite or invalid fitness.
WORST = sys.float_info.max


def sanitize_fitness(value: float) -> float:
    """Map NaN and infinities to WORST so every fitness is totally ordered."""
    value = float(value)
    if not np.isfinite(value):
        return WORST
    return value


@dataclass
class Candidate:
    """A decision vector with its cached fitness."""
    genes: np.ndarray
    fitness: float = WORST

    def copy(self) -> 'Candidate':
        return Candidate(self.genes.copy(), self.fitness)

    @property
    def dimension(self) -> int:
        return int(self.genes.shape[0])


@dataclass(frozen=True)
class Domain:
    """Per-dimension box bounds of the decision space."""
    lower: np.ndarray
    upper: np.ndarray

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        if lower.shape != upper.shape or lower.ndim != 1:
            raise InvalidParameter("Domain bounds must be 1-D vectors of equal length")
        if not np.all(lower < upper):
            raise InvalidParameter("Domain requires lower[i] < upper[i] for every i")
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)

    @classmethod
    def box(cls, n: int, low: float, high: float) -> 'Domain':
        """Hypercube [low, high]^n."""
        return cls(np.full(n, float(low)), np.full(n, float(high)))

    @property
    def dimension(self) -> int:
        return int(self.lower.shape[0])

    @property
    def width(self) -> np.ndarray:
        return self.upper - self.lower

    def contains(self, x: np.ndarray) -> bool:
        return bool(np.all((x >= self.lower) & (x <= self.upper)))


@dataclass
class Problem:
    """Objective function bound to its domain."""
    dimension: int
    domain: Domain
    evaluator: Callable[[np.ndarray], float]
    label: str
    known_optimum: Optional[float] = None
    metadata: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.domain.dimension != self.dimension:
            raise DimensionMismatch(self.dimension, self.domain.dimension)

    def __call__(self, x: np.ndarray) -> float:
        return self.evaluator(x)


def uniform_sample(domain: Domain, rng: np.random.Generator) -> np.ndarray:
    """Draw each component independently and uniformly within its bounds."""
    return rng.uniform(domain.lower, domain.upper)


def toroidal_correct(x: np.ndarray, domain: Domain) -> np.ndarray:
    """Wrap out-of-bounds components back into the box.

    A component that leaves [a, b] by zeta re-enters from the opposite edge
    at distance zeta: a + ((x - a) mod (b - a)). In-bounds values are
    returned untouched.
    """
    x = np.asarray(x, dtype=float)
    lower, upper = domain.lower, domain.upper
    outside = (x < lower) | (x > upper)
    if not outside.any():
        return x.copy()
    wrapped = lower + np.mod(x - lower, upper - lower)
    return np.where(outside, wrapped, x)
