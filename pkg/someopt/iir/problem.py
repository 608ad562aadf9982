"""Filter identification exposed as a Problem over [0, 1]^21."""

from typing import Optional

import numpy as np

from core.types import WORST, Domain, Problem, sanitize_fitness

from .jury import is_stable
from .signals import N_COEFFS, FilterCoeffs, SignalPair, filter_response, make_signals

IIR_PROBLEM_ID = "iir"


def mae_objective(coeffs: FilterCoeffs, signals: SignalPair) -> float:
    """Mean absolute error between plant and filter outputs; WORST for unstable filters."""
    if not is_stable(coeffs.b):
        return WORST
    y = filter_response(coeffs, signals.u)
    return sanitize_fitness(np.mean(np.abs(signals.d - y)))


class IIRProblem:
    """Picklable evaluator over packed coefficient vectors."""

    def __init__(self, signals: SignalPair):
        self.signals = signals

    def __call__(self, x: np.ndarray) -> float:
        return mae_objective(FilterCoeffs.unpack(x), self.signals)


def make_iir_problem(noise_seed: int = 0, signals: Optional[SignalPair] = None) -> Problem:
    """
    Build the identification problem with its signals generated once.

    Args:
        noise_seed: Seed of the input noise, frozen for the whole experiment
        signals: Prebuilt signals to share instead of generating new ones

    Returns:
        Problem of dimension 21 on [0, 1]^21
    """
    signals = signals or make_signals(noise_seed=noise_seed)
    return Problem(
        dimension=N_COEFFS,
        domain=Domain.box(N_COEFFS, 0.0, 1.0),
        evaluator=IIRProblem(signals),
        label=IIR_PROBLEM_ID,
        known_optimum=None,
        metadata={
            'name': 'IIR filter identification',
            'seed': signals.noise_seed,
            'modality': 'multimodal',
            'separability': 'non-separable',
            'rotated': False,
            'shifted': False,
        }
    )
