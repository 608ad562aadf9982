# core/__init__.py
"""Core value types, budget accounting, seeding and the optimizer's run loop."""

from .budget import BudgetTracker, evaluate, evaluate_candidate
from .errors import (
    BudgetExhausted,
    ConfigError,
    DegeneratePolynomial,
    DegenerateSample,
    DimensionMismatch,
    InvalidParameter,
    SomeOptError,
)
from .rng import derive_seed, make_rng
from .types import WORST, Candidate, Domain, Problem, toroidal_correct, uniform_sample

__all__ = [
    'BudgetTracker',
    'evaluate',
    'evaluate_candidate',
    'BudgetExhausted',
    'ConfigError',
    'DegeneratePolynomial',
    'DegenerateSample',
    'DimensionMismatch',
    'InvalidParameter',
    'SomeOptError',
    'derive_seed',
    'make_rng',
    'WORST',
    'Candidate',
    'Domain',
    'Problem',
    'toroidal_correct',
    'uniform_sample'
]
