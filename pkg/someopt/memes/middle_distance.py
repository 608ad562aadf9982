"""Middle distance exploration: randomized search inside a hypercube around the elite."""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from core.budget import BudgetTracker, evaluate
from core.errors import InvalidParameter
from core.types import Candidate, Domain, Problem, toroidal_correct

from .base_meme import BaseMeme, Phase
from .crossover import CrossoverParams, exponential_crossover


@dataclass(frozen=True)
class HypercubeParams:
    """Hypercube side as a fraction of each dimension's width, and trials per dimension."""
    delta_fraction: float = 0.20
    k: int = 4

    def __post_init__(self):
        if not 0.0 < self.delta_fraction <= 1.0:
            raise InvalidParameter(f"delta_fraction must lie in (0, 1], got {self.delta_fraction}")
        if self.k < 1:
            raise InvalidParameter(f"k must be a positive integer, got {self.k}")

    def side(self, domain: Domain) -> np.ndarray:
        """Per-dimension side width delta_i."""
        return self.delta_fraction * domain.width


def middle_distance_phase(elite: Candidate, domain: Domain, hp: HypercubeParams,
                          cp_middle: CrossoverParams, rng: np.random.Generator,
                          tracker: BudgetTracker, problem: Problem) -> Tuple[Candidate, bool]:
    """
    Rounds of k*n hypercube trials, repeated while a round replaces the elite.

    Each round fixes the hypercube on the elite it starts from. Trials are
    sampled in elite +/- delta_i / 2, wrapped toroidally, crossed with the
    current elite at ``cp_middle.cr`` and accepted on <=. A trial that copied
    every elite gene is evaluated but never counts as a replacement. The phase stops
    after the first round without replacement or when the budget runs out.

    Returns:
        (new elite, whether any round replaced the elite)
    """
    half = hp.side(domain) / 2.0
    trials = hp.k * domain.dimension
    improved_overall = False

    while not tracker.exhausted:
        centre = elite.genes.copy()
        replaced = False
        for _ in range(trials):
            if tracker.exhausted:
                return elite, improved_overall or replaced
            sample = toroidal_correct(rng.uniform(centre - half, centre + half), domain)
            trial = exponential_crossover(elite, sample, cp_middle.cr, rng)
            fitness = evaluate(problem, trial, tracker)
            # a clone of the elite is charged but does not count as a replacement
            if fitness <= elite.fitness and not np.array_equal(trial, elite.genes):
                elite = Candidate(trial, fitness)
                replaced = True
        if not replaced:
            break
        improved_overall = True

    return elite, improved_overall


class MiddleDistanceMeme(BaseMeme):
    phase = Phase.MIDDLE

    def __init__(self, problem: Problem, tracker: BudgetTracker, rng: np.random.Generator,
                 hp: HypercubeParams, cp_middle: CrossoverParams, logger=None):
        self.hp = hp
        self.cp_middle = cp_middle
        super().__init__(problem, tracker, rng, logger)

    def explore(self, elite: Candidate) -> Tuple[Candidate, bool]:
        return middle_distance_phase(
            elite, self.problem.domain, self.hp, self.cp_middle, self.rng, self.tracker, self.problem
        )
