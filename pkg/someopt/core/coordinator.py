"""Trial-and-error coordination of the exploration memes (3SOME and its ablations)."""

import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field

from memes import (
    BaseMeme,
    CrossoverParams,
    HypercubeParams,
    LongDistanceMeme,
    MiddleDistanceMeme,
    Phase,
    ShortDistanceMeme,
    ShortSearchParams,
)
from utils import get_logger, log_kv

from .budget import BudgetTracker, evaluate_candidate
from .errors import InvalidParameter
from .rng import derive_seed, make_rng
from .types import Candidate, Problem, uniform_sample

logger = get_logger("coordinator")


class Variant(str, Enum):
    """Which memes take part in a run; the values are the algorithm ids."""
    THREE_SOME = "3SOME"
    ONE_SOME = "1SOME"
    TWO_SOME_LM = "2SOME_LM"
    TWO_SOME_LS = "2SOME_LS"
    TWO_SOME_MS = "2SOME_MS"


# phase -> (next phase if the activation succeeded, next phase otherwise)
TRANSITIONS: Dict[Variant, Dict[Phase, Tuple[Phase, Phase]]] = {
    Variant.THREE_SOME: {
        Phase.LONG: (Phase.MIDDLE, Phase.MIDDLE),
        Phase.MIDDLE: (Phase.SHORT, Phase.SHORT),
        Phase.SHORT: (Phase.MIDDLE, Phase.LONG),
    },
    Variant.ONE_SOME: {
        Phase.LONG: (Phase.LONG, Phase.LONG),
    },
    Variant.TWO_SOME_LM: {
        Phase.LONG: (Phase.MIDDLE, Phase.MIDDLE),
        Phase.MIDDLE: (Phase.LONG, Phase.LONG),
    },
    Variant.TWO_SOME_LS: {
        Phase.LONG: (Phase.SHORT, Phase.SHORT),
        Phase.SHORT: (Phase.LONG, Phase.LONG),
    },
    Variant.TWO_SOME_MS: {
        Phase.MIDDLE: (Phase.SHORT, Phase.SHORT),
        Phase.SHORT: (Phase.MIDDLE, Phase.MIDDLE),
    },
}

ENTRY_PHASE: Dict[Variant, Phase] = {
    Variant.THREE_SOME: Phase.LONG,
    Variant.ONE_SOME: Phase.LONG,
    Variant.TWO_SOME_LM: Phase.LONG,
    Variant.TWO_SOME_LS: Phase.LONG,
    Variant.TWO_SOME_MS: Phase.MIDDLE,
}


class SomeParameters(BaseModel):
    """Meme parameters; defaults are the published settings."""
    model_config = ConfigDict(extra="forbid", frozen=True)

    alpha: float = Field(0.05, gt=0.0, lt=1.0)
    delta_fraction: float = Field(0.20, gt=0.0, le=1.0)
    k: int = Field(4, ge=1)
    rho_fraction: float = Field(0.40, gt=0.0, le=1.0)
    max_sweeps: int = Field(150, ge=1)


class SomeConfig(SomeParameters):
    """Meme parameters plus the variant they drive."""
    variant: Variant = Variant.THREE_SOME


@dataclass
class PhaseEvent:
    """One meme activation as seen by the coordinator."""
    phase: Phase
    start_evaluation: int
    evaluations: int
    improved: bool


@dataclass
class RunResult:
    """Outcome of one optimizer run."""
    best: Candidate
    trajectory: List[Tuple[int, float]]
    evaluations_used: int
    seed: int
    problem: str = ""
    algorithm: str = Variant.THREE_SOME.value
    events: List[PhaseEvent] = field(default_factory=list)
    phase_summary: Dict[str, Dict[str, Any]] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary for JSON serialization (events stay in memory)."""
        return {
            'problem': self.problem,
            'algorithm': self.algorithm,
            'seed': self.seed,
            'evaluations_used': self.evaluations_used,
            'best_fitness': self.best.fitness,
            'best_genes': self.best.genes.tolist(),
            'trajectory': [[evals, fitness] for evals, fitness in self.trajectory],
            'phase_summary': self.phase_summary
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'RunResult':
        """Create from dictionary."""
        return cls(
            best=Candidate(np.asarray(data['best_genes'], dtype=float), float(data['best_fitness'])),
            trajectory=[(int(evals), float(fitness)) for evals, fitness in data['trajectory']],
            evaluations_used=int(data['evaluations_used']),
            seed=int(data['seed']),
            problem=data.get('problem', ''),
            algorithm=data.get('algorithm', Variant.THREE_SOME.value),
            phase_summary=data.get('phase_summary', {})
        )


class Coordinator:
    """Runs the meme state machine of one variant on one problem."""

    def __init__(self, problem: Problem, config: SomeConfig, budget_limit: int, seed: int):
        """
        Initialize a single run.

        Args:
            problem: Objective to minimize
            config: Optimizer parameters and variant
            budget_limit: Hard cap on objective calls
            seed: 64-bit seed of the run's random stream
        """
        if budget_limit < 1:
            raise InvalidParameter(f"Budget must be positive, got {budget_limit}")
        self.problem = problem
        self.config = config
        self.seed = int(seed)
        self.rng = make_rng(self.seed)
        self.tracker = BudgetTracker(budget_limit)
        self.memes = self._build_memes()

    def _build_memes(self) -> Dict[Phase, BaseMeme]:
        cfg = self.config
        n = self.problem.dimension
        long_params = CrossoverParams(cfg.alpha, n)
        available = {
            Phase.LONG: lambda: LongDistanceMeme(
                self.problem, self.tracker, self.rng, long_params
            ),
            Phase.MIDDLE: lambda: MiddleDistanceMeme(
                self.problem, self.tracker, self.rng,
                HypercubeParams(cfg.delta_fraction, cfg.k), long_params.complement()
            ),
            Phase.SHORT: lambda: ShortDistanceMeme(
                self.problem, self.tracker, self.rng,
                ShortSearchParams(cfg.rho_fraction, cfg.max_sweeps)
            ),
        }
        return {phase: available[phase]() for phase in TRANSITIONS[cfg.variant]}

    def run(self) -> RunResult:
        """Sample the elite, then activate memes until the budget is spent."""
        variant = self.config.variant
        transitions = TRANSITIONS[variant]
        elite = evaluate_candidate(self.problem, uniform_sample(self.problem.domain, self.rng), self.tracker)
        events: List[PhaseEvent] = []

        phase = ENTRY_PHASE[variant]
        while not self.tracker.exhausted:
            outcome = self.memes[phase].execute(elite)
            elite = outcome.elite
            events.append(PhaseEvent(phase, outcome.start_evaluation, outcome.evaluations, outcome.improved))
            on_success, on_failure = transitions[phase]
            phase = on_success if outcome.improved else on_failure

        result = RunResult(
            best=elite,
            trajectory=self.tracker.close(),
            evaluations_used=self.tracker.consumed,
            seed=self.seed,
            problem=self.problem.label,
            algorithm=variant.value,
            events=events,
            phase_summary={p.value: m.get_metrics() for p, m in self.memes.items()}
        )
        log_kv(
            logger, "run.complete", level=logging.DEBUG,
            problem=self.problem.label, algorithm=variant.value, seed=self.seed,
            evaluations=result.evaluations_used, best_fitness=elite.fitness
        )
        return result


def run(problem: Problem, config: SomeConfig, budget_limit: int, seed: int) -> RunResult:
    """Execute one run; identical arguments give bit-identical results."""
    return Coordinator(problem, config, budget_limit, seed).run()


def _run_indexed(args: Tuple[Problem, SomeConfig, int, int]) -> RunResult:
    problem, config, budget_limit, seed = args
    return run(problem, config, budget_limit, seed)


def run_seeds(problem: Problem, config: SomeConfig, n_runs: int, master_seed: int) -> List[int]:
    """Seeds of a batch, derived from (master_seed, problem, algorithm, run index)."""
    return [
        derive_seed(master_seed, problem.label, config.variant.value, index)
        for index in range(n_runs)
    ]


def run_batch(problem: Problem, config: SomeConfig, budget_limit: int, n_runs: int,
              master_seed: int, workers: Optional[int] = None) -> List[RunResult]:
    """
    Execute ``n_runs`` independent runs in run-index order.

    Args:
        problem: Objective to minimize; must be picklable when workers > 1
        config: Optimizer parameters and variant
        budget_limit: Evaluations per run
        n_runs: Number of runs
        master_seed: Experiment seed the run seeds are derived from
        workers: Worker processes; None or 1 runs serially

    Returns:
        Results in run-index order, identical for any worker count
    """
    if n_runs < 1:
        raise InvalidParameter(f"n_runs must be positive, got {n_runs}")
    if budget_limit < 1:
        raise InvalidParameter(f"Budget must be positive, got {budget_limit}")

    jobs = [(problem, config, budget_limit, seed)
            for seed in run_seeds(problem, config, n_runs, master_seed)]
    if workers is not None and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_indexed, jobs))
    else:
        results = [_run_indexed(job) for job in jobs]

    log_kv(
        logger, "batch.complete",
        problem=problem.label, algorithm=config.variant.value, runs=n_runs,
        budget=budget_limit, best=min(r.best.fitness for r in results)
    )
    return results
