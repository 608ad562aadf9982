"""Short distance exploration: deterministic per-coordinate descent with a shrinking radius."""

from dataclasses import dataclass
from typing import Tuple

import numpy as np

from core.budget import BudgetTracker, evaluate
from core.errors import InvalidParameter
from core.types import Candidate, Domain, Problem, toroidal_correct

from .base_meme import BaseMeme, Phase


@dataclass(frozen=True)
class ShortSearchParams:
    """Initial radius as a fraction of each dimension's width, and the sweep budget."""
    rho_fraction: float = 0.40
    max_sweeps: int = 150

    def __post_init__(self):
        if not 0.0 < self.rho_fraction <= 1.0:
            raise InvalidParameter(f"rho_fraction must lie in (0, 1], got {self.rho_fraction}")
        if self.max_sweeps < 1:
            raise InvalidParameter(f"max_sweeps must be a positive integer, got {self.max_sweeps}")

    def initial_radius(self, domain: Domain) -> np.ndarray:
        return self.rho_fraction * domain.width


def _accepts(point: np.ndarray, fitness: float, trial: np.ndarray, trial_fitness: float) -> bool:
    # a radius below half an ulp rounds the step away; that copy is charged, never accepted
    return fitness <= trial_fitness and not np.array_equal(point, trial)


def short_distance_phase(elite: Candidate, domain: Domain, sp: ShortSearchParams,
                         tracker: BudgetTracker, problem: Problem) -> Tuple[Candidate, bool]:
    """
    Coordinate sweeps around the elite, at most ``sp.max_sweeps`` of them.

    For every coordinate i the point x_e[i] - rho_i is tried first and, only
    if it loses against the sweep's best point x_t, the half step
    x_e[i] + rho_i / 2. A failed coordinate is restored to x_e[i]. A sweep
    that accepted any point moves the elite to x_t; otherwise every rho_i is
    halved. rho starts from ``sp.rho_fraction`` of the width on every call.
    Ties are accepted, except a point whose genes equal x_t: once rho is
    too small to change x_e[i], the sweep fails and rho keeps halving.

    Returns:
        (new elite, whether any sweep moved the elite)
    """
    rho = sp.initial_radius(domain)
    entry_fitness = elite.fitness
    moved = False

    for _ in range(sp.max_sweeps):
        if tracker.exhausted:
            break
        trial = elite.genes.copy()
        trial_fitness = elite.fitness
        updated = False

        for i in range(domain.dimension):
            if tracker.exhausted:
                break
            x_s = trial.copy()
            x_s[i] = elite.genes[i] - rho[i]
            x_s = toroidal_correct(x_s, domain)
            fitness = evaluate(problem, x_s, tracker)
            if _accepts(x_s, fitness, trial, trial_fitness):
                trial, trial_fitness, updated = x_s, fitness, True
                continue

            if tracker.exhausted:
                break
            x_s[i] = elite.genes[i] + rho[i] / 2.0
            x_s = toroidal_correct(x_s, domain)
            fitness = evaluate(problem, x_s, tracker)
            if _accepts(x_s, fitness, trial, trial_fitness):
                trial, trial_fitness, updated = x_s, fitness, True

        # x_t is never worse than the elite, so a partial sweep is kept too
        if updated:
            elite = Candidate(trial, trial_fitness)
            moved = True
        else:
            rho = rho / 2.0

    return elite, moved or elite.fitness < entry_fitness


class ShortDistanceMeme(BaseMeme):
    phase = Phase.SHORT

    def __init__(self, problem: Problem, tracker: BudgetTracker, rng: np.random.Generator,
                 sp: ShortSearchParams, logger=None):
        self.sp = sp
        super().__init__(problem, tracker, rng, logger)

    def explore(self, elite: Candidate) -> Tuple[Candidate, bool]:
        return short_distance_phase(elite, self.problem.domain, self.sp, self.tracker, self.problem)
