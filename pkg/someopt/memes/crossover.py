"""Exponential crossover and its dimension-independent rate calibration."""

from dataclasses import dataclass, field

import numpy as np

from core.errors import DimensionMismatch, InvalidParameter
from core.types import Candidate

_CR_MIN = np.nextafter(0.0, 1.0)
_CR_MAX = np.nextafter(1.0, 0.0)


def crossover_rate(n: int, alpha: float) -> float:
    """
    Crossover rate that copies about ``n * alpha`` extra elite genes.

    Cr is chosen so that Cr^(n * alpha) = 0.5, i.e. Cr = 2^(-1 / (n * alpha)).

    Args:
        n: Problem dimensionality
        alpha: Inheritance factor

    Returns:
        Cr clamped into the open interval (0, 1)
    """
    n_alpha = n * alpha
    if n < 1 or not n_alpha > 0:
        raise InvalidParameter(f"crossover_rate needs n >= 1 and n*alpha > 0, got n={n}, alpha={alpha}")
    cr = 2.0 ** (-1.0 / n_alpha)
    return float(min(max(cr, _CR_MIN), _CR_MAX))


@dataclass(frozen=True)
class CrossoverParams:
    """Inheritance factor with the crossover rate it implies at dimension n."""
    alpha: float
    n: int
    cr: float = field(init=False)

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise InvalidParameter(f"Inheritance factor must lie in (0, 1), got {self.alpha}")
        object.__setattr__(self, "cr", crossover_rate(self.n, self.alpha))

    def complement(self) -> 'CrossoverParams':
        """Parameters on the basis of 1 - alpha, as used by middle distance."""
        return CrossoverParams(1.0 - self.alpha, self.n)


def exponential_crossover(elite: Candidate, base: np.ndarray, cr: float,
                          rng: np.random.Generator) -> np.ndarray:
    """
    Copy a contiguous, cyclically wrapping block of elite genes into base.

    The gene at a uniformly drawn start index is always copied; each further
    gene is copied while a fresh uniform draw is <= cr. At most n genes are
    copied.

    Args:
        elite: Donor of the copied genes
        base: Receiver; left untouched, a new vector is returned
        cr: Crossover rate
        rng: Random stream

    Returns:
        Offspring gene vector
    """
    donor = elite.genes
    n = base.shape[0]
    if donor.shape[0] != n:
        raise DimensionMismatch(n, donor.shape[0])

    child = base.copy()
    i = int(rng.integers(n))
    child[i] = donor[i]
    copied = 1
    while copied < n and rng.random() <= cr:
        i = (i + 1) % n
        child[i] = donor[i]
        copied += 1
    return child
