"""Exceptions raised across the optimizer, benchmarks, statistics and CLI."""

from typing import List, Optional


class SomeOptError(Exception):
    """Base class for all errors raised by this project."""


class BudgetExhausted(SomeOptError):
    """An evaluation was requested after the fitness budget ran out."""

    def __init__(self, limit: int):
        super().__init__(f"Fitness budget of {limit} evaluations exhausted")
        self.limit = limit


class InvalidParameter(SomeOptError, ValueError):
    """A numeric parameter lies outside its admissible range."""


class DimensionMismatch(SomeOptError, ValueError):
    """A gene vector does not match the problem dimensionality."""

    def __init__(self, expected: int, got: int):
        super().__init__(f"Expected a vector of length {expected}, got {got}")
        self.expected = expected
        self.got = got


class DegenerateSample(SomeOptError, ValueError):
    """A statistical test received an empty sample."""


class DegeneratePolynomial(SomeOptError, ValueError):
    """A polynomial has a zero leading coefficient."""


class ConfigError(SomeOptError, ValueError):
    """Experiment configuration could not be parsed or validated."""

    def __init__(self, message: str, diagnostics: Optional[List[str]] = None):
        self.diagnostics = diagnostics or []
        details = "; ".join(self.diagnostics)
        super().__init__(f"{message}: {details}" if details else message)
