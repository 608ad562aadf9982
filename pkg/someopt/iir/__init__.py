# iir/__init__.py
"""Digital IIR filter identification application."""

from .jury import characteristic_polynomial, is_stable, jury_stable, pole_moduli
from .problem import IIR_PROBLEM_ID, IIRProblem, mae_objective, make_iir_problem
from .signals import (
    PLANT_DENOMINATOR,
    PLANT_NUMERATOR,
    FilterCoeffs,
    SignalPair,
    filter_response,
    generate_input,
    make_signals,
    simulate_plant,
)

__all__ = [
    'characteristic_polynomial',
    'is_stable',
    'jury_stable',
    'pole_moduli',
    'IIR_PROBLEM_ID',
    'IIRProblem',
    'mae_objective',
    'make_iir_problem',
    'PLANT_DENOMINATOR',
    'PLANT_NUMERATOR',
    'FilterCoeffs',
    'SignalPair',
    'filter_response',
    'generate_input',
    'make_signals',
    'simulate_plant'
]
