"""Long distance exploration: global sampling with inheritance from the elite."""

from typing import Tuple

import numpy as np

from core.budget import BudgetTracker, evaluate
from core.types import Candidate, Domain, Problem, uniform_sample

from .base_meme import BaseMeme, Phase
from .crossover import CrossoverParams, exponential_crossover


def long_distance_step(elite: Candidate, domain: Domain, params: CrossoverParams,
                       rng: np.random.Generator, tracker: BudgetTracker,
                       problem: Problem) -> Tuple[Candidate, bool]:
    """
    Sample a point in the whole domain, cross it with the elite and compare.

    Costs exactly one evaluation. Ties replace the elite unless the trial
    copied every elite gene.

    Raises:
        BudgetExhausted: if called with no budget left
    """
    trial = exponential_crossover(elite, uniform_sample(domain, rng), params.cr, rng)
    fitness = evaluate(problem, trial, tracker)
    if fitness <= elite.fitness and not np.array_equal(trial, elite.genes):
        return Candidate(trial, fitness), True
    return elite, False


class LongDistanceMeme(BaseMeme):
    """
    Repeats long distance steps until one replaces the elite.

    At n = 1 the crossover always copies the only gene, so every trial is the
    elite itself; an activation then makes one charged step and fails.
    """

    phase = Phase.LONG

    def __init__(self, problem: Problem, tracker: BudgetTracker,
                 rng: np.random.Generator, params: CrossoverParams, logger=None):
        self.params = params
        super().__init__(problem, tracker, rng, logger)

    def explore(self, elite: Candidate) -> Tuple[Candidate, bool]:
        while not self.tracker.exhausted:
            elite, improved = long_distance_step(
                elite, self.problem.domain, self.params, self.rng, self.tracker, self.problem
            )
            if improved or self.problem.dimension == 1:
                return elite, improved
        return elite, False
