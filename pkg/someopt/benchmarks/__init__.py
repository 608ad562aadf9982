# benchmarks/__init__.py
"""Self-contained test problems f1-f30."""

from .suite import (
    CEC2008_IDS,
    SUITE_IDS,
    SUITE_TABLE,
    BenchmarkFunction,
    ProblemSpec,
    eval_benchmark,
    make_suite,
    manifest,
    problem_specs,
    to_problem,
)
from .transforms import RotationMatrix, ShiftVector, generate_rotation, generate_shift

__all__ = [
    'CEC2008_IDS',
    'SUITE_IDS',
    'SUITE_TABLE',
    'BenchmarkFunction',
    'ProblemSpec',
    'eval_benchmark',
    'make_suite',
    'manifest',
    'problem_specs',
    'to_problem',
    'RotationMatrix',
    'ShiftVector',
    'generate_rotation',
    'generate_shift'
]
