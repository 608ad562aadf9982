"""Base class shared by the three exploration memes."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, Tuple

import numpy as np

from core.budget import BudgetTracker
from core.types import Candidate, Problem
from utils.logging_setup import get_logger, log_kv


class Phase(str, Enum):
    """Exploration stage identifiers."""
    LONG = "long"
    MIDDLE = "middle"
    SHORT = "short"


@dataclass
class MemeOutcome:
    """Result of one meme activation."""
    phase: Phase
    elite: Candidate
    improved: bool
    start_evaluation: int
    evaluations: int


class BaseMeme(ABC):
    """Abstract base class for the exploration memes of one run."""

    phase: Phase

    def __init__(self, problem: Problem, tracker: BudgetTracker,
                 rng: np.random.Generator, logger=None):
        """
        Initialize the meme.

        Args:
            problem: Objective being minimized
            tracker: Budget shared by every meme of the run
            rng: Random stream of the run
            logger: Optional logger instance
        """
        self.problem = problem
        self.tracker = tracker
        self.rng = rng
        self.logger = logger or get_logger(f"meme.{self.phase.value}")
        self.metrics = {
            'activations': 0,
            'successes': 0,
            'evaluations': 0
        }

    @abstractmethod
    def explore(self, elite: Candidate) -> Tuple[Candidate, bool]:
        """
        Run one activation of the meme on the elite.

        Args:
            elite: Current elite; never mutated

        Returns:
            (new elite, whether the activation succeeded)
        """

    def execute(self, elite: Candidate) -> MemeOutcome:
        """Run ``explore`` and account for it in the meme's metrics."""
        start = self.tracker.consumed
        new_elite, improved = self.explore(elite)
        used = self.tracker.consumed - start

        self.metrics['activations'] += 1
        self.metrics['evaluations'] += used
        if improved:
            self.metrics['successes'] += 1

        if self.logger.isEnabledFor(logging.DEBUG):
            log_kv(
                self.logger, "meme.end", level=logging.DEBUG, phase=self.phase.value,
                improved=improved, evaluations=used, fitness=new_elite.fitness
            )

        return MemeOutcome(self.phase, new_elite, improved, start, used)

    def get_metrics(self) -> Dict[str, Any]:
        """Get activation counts and success rate of this meme."""
        return {
            'phase': self.phase.value,
            'activations': self.metrics['activations'],
            'successes': self.metrics['successes'],
            'evaluations': self.metrics['evaluations'],
            'success_rate': self.metrics['successes'] / max(1, self.metrics['activations'])
        }

    def __repr__(self):
        return f"{self.__class__.__name__}(phase='{self.phase.value}')"
