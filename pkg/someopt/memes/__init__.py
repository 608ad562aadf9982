# memes/__init__.py
"""The three exploration memes and the crossover they share."""

from .base_meme import BaseMeme, MemeOutcome, Phase
from .crossover import CrossoverParams, crossover_rate, exponential_crossover
from .long_distance import LongDistanceMeme, long_distance_step
from .middle_distance import HypercubeParams, MiddleDistanceMeme, middle_distance_phase
from .short_distance import ShortDistanceMeme, ShortSearchParams, short_distance_phase

__all__ = [
    'BaseMeme',
    'MemeOutcome',
    'Phase',
    'CrossoverParams',
    'crossover_rate',
    'exponential_crossover',
    'LongDistanceMeme',
    'long_distance_step',
    'HypercubeParams',
    'MiddleDistanceMeme',
    'middle_distance_phase',
    'ShortDistanceMeme',
    'ShortSearchParams',
    'short_distance_phase'
]
