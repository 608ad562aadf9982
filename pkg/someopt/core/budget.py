"""Fitness-evaluation budget accounting and best-so-far trajectory recording."""

from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np

from .errors import BudgetExhausted, DimensionMismatch, InvalidParameter
from .types import WORST, Candidate, Problem, sanitize_fitness

# Number of checkpoints per run on the trend grid.
TREND_POINTS = 200


@dataclass
class BudgetTracker:
    """Counts objective calls against a hard limit.

    Besides the counter, the tracker keeps the best fitness seen so far and a
    trajectory of (evaluations_consumed, best_fitness_so_far) samples. A
    sample is recorded at every strict improvement and every
    ``limit // TREND_POINTS`` evaluations.
    """
    limit: int
    consumed: int = 0
    best_fitness: float = WORST
    trajectory: List[Tuple[int, float]] = field(default_factory=list)
    on_evaluation: Optional[Callable[[int, float], None]] = None

    def __post_init__(self):
        if int(self.limit) < 1:
            raise InvalidParameter(f"Budget limit must be positive, got {self.limit}")
        self.limit = int(self.limit)
        self.record_every = max(1, self.limit // TREND_POINTS)

    @property
    def exhausted(self) -> bool:
        return self.consumed >= self.limit

    @property
    def remaining(self) -> int:
        return self.limit - self.consumed

    def charge(self, fitness: float) -> None:
        """Account for one evaluation that produced ``fitness``."""
        if self.exhausted:
            raise BudgetExhausted(self.limit)
        self.consumed += 1
        if fitness < self.best_fitness:
            self.best_fitness = fitness
            self._record()
        elif self.consumed % self.record_every == 0:
            self._record()
        if self.on_evaluation is not None:
            self.on_evaluation(self.consumed, fitness)

    def close(self) -> List[Tuple[int, float]]:
        """Append the final sample and return the trajectory."""
        if self.consumed and (not self.trajectory or self.trajectory[-1][0] != self.consumed):
            self._record()
        return self.trajectory

    def _record(self) -> None:
        if self.trajectory and self.trajectory[-1][0] == self.consumed:
            self.trajectory[-1] = (self.consumed, self.best_fitness)
        else:
            self.trajectory.append((self.consumed, self.best_fitness))


def evaluate(problem: Problem, x: np.ndarray, tracker: BudgetTracker) -> float:
    """Evaluate ``x`` on ``problem`` and charge one unit of budget.

    Args:
        problem: Objective to call
        x: Gene vector of length ``problem.dimension``
        tracker: Budget the call is charged to

    Returns:
        Fitness of ``x``; non-finite values become WORST

    Raises:
        BudgetExhausted: if the tracker is already at its limit
        DimensionMismatch: if ``x`` has the wrong length
    """
    if tracker.exhausted:
        raise BudgetExhausted(tracker.limit)
    if x.shape[0] != problem.dimension:
        raise DimensionMismatch(problem.dimension, x.shape[0])
    fitness = sanitize_fitness(problem(x))
    tracker.charge(fitness)
    return fitness


def evaluate_candidate(problem: Problem, genes: np.ndarray, tracker: BudgetTracker) -> Candidate:
    """Wrap ``genes`` in a Candidate carrying its freshly charged fitness."""
    return Candidate(genes, evaluate(problem, genes, tracker))
