"""Pairwise Wilcoxon rank-sum verdicts for minimization results."""

from enum import Enum
from typing import Sequence

import numpy as np
from scipy.stats import mannwhitneyu

from core.errors import DegenerateSample


class Verdict(str, Enum):
    """Outcome for the first sample: better, equivalent or worse."""
    PLUS = "+"
    EQUALS = "="
    MINUS = "-"


def wilcoxon_verdict(a: Sequence[float], b: Sequence[float], significance: float = 0.05) -> Verdict:
    """
    Two-sided rank-sum test of ``a`` against ``b``.

    Midranks handle ties; the p-value comes from the tie-corrected normal
    approximation with continuity correction. A significant difference is
    PLUS when ``a`` has the lower rank sum (better for minimization) and
    MINUS otherwise.

    Args:
        a: Final fitness values of the reference algorithm
        b: Final fitness values of the challenger
        significance: Two-sided level (default 0.05, i.e. 0.95 confidence)

    Returns:
        Verdict from the point of view of ``a``

    Raises:
        DegenerateSample: if either sample is empty
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if a.size == 0 or b.size == 0:
        raise DegenerateSample("Wilcoxon rank-sum test needs two non-empty samples")

    pooled = np.concatenate([a, b])
    if np.all(pooled == pooled[0]):
        return Verdict.EQUALS

    result = mannwhitneyu(a, b, alternative="two-sided", method="asymptotic", use_continuity=True)
    if not result.pvalue < significance:
        return Verdict.EQUALS
    if result.statistic < a.size * b.size / 2.0:
        return Verdict.PLUS
    return Verdict.MINUS
