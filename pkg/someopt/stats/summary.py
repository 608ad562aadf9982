"""Aggregate final fitness values into the comparison tables."""

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence

import numpy as np
import pandas as pd

from core.errors import InvalidParameter
from core.types import WORST

from .holm import HolmRow, holm_procedure, rank_scores
from .wilcoxon import wilcoxon_verdict

# problem -> algorithm -> final fitness of every run
FinalsTable = Mapping[str, Mapping[str, Sequence[float]]]


@dataclass
class StatReport:
    """Per-problem statistics, pairwise verdicts and the Holm table of one experiment."""
    reference: str
    results: pd.DataFrame
    wilcoxon: pd.DataFrame
    holm: List[HolmRow] = field(default_factory=list)
    ranks: Dict[str, float] = field(default_factory=dict)

    def holm_frame(self) -> pd.DataFrame:
        return pd.DataFrame(
            [row.to_dict() for row in self.holm],
            columns=['j', 'algorithm', 'z', 'p', 'threshold', 'hypothesis']
        )


def mean_std(values: Sequence[float]):
    """Mean and std that saturate at WORST instead of overflowing."""
    values = np.asarray(values, dtype=float)
    with np.errstate(over='ignore', invalid='ignore'):
        mean = float(np.sum(values / values.size))
        std = float(np.std(values)) if values.size > 1 else 0.0
    if not np.isfinite(std):
        std = WORST
    return min(mean, WORST), min(std, WORST)


def summarize(finals: FinalsTable, reference: str, significance: float = 0.05,
              delta: float = 0.05) -> StatReport:
    """
    Build every table of an experiment from its final fitness values.

    Args:
        finals: problem -> algorithm -> final fitness per run
        reference: Algorithm the Wilcoxon and Holm comparisons are made against
        significance: Level of the pairwise Wilcoxon tests
        delta: Family-wise level of the Holm procedure

    Returns:
        StatReport; the Holm table is empty with fewer than two algorithms
    """
    problems = list(finals)
    if not problems:
        raise InvalidParameter("No results to summarize")
    algorithms = list(finals[problems[0]])
    if reference not in algorithms:
        raise InvalidParameter(f"Reference algorithm {reference} has no results")

    result_rows = []
    verdict_rows = []
    means = np.empty((len(algorithms), len(problems)))
    for p_index, problem in enumerate(problems):
        for a_index, algorithm in enumerate(algorithms):
            values = finals[problem][algorithm]
            mean, std = mean_std(values)
            means[a_index, p_index] = mean
            result_rows.append({
                'problem': problem,
                'algorithm': algorithm,
                'runs': len(values),
                'mean': mean,
                'std': std,
                'best': float(np.min(values)),
                'median': float(np.median(values)),
                'worst': float(np.max(values)),
            })
            if algorithm != reference:
                verdict = wilcoxon_verdict(finals[problem][reference], values, significance)
                verdict_rows.append({
                    'problem': problem,
                    'reference': reference,
                    'challenger': algorithm,
                    'verdict': verdict.value,
                })

    report = StatReport(
        reference=reference,
        results=pd.DataFrame(result_rows),
        wilcoxon=pd.DataFrame(verdict_rows, columns=['problem', 'reference', 'challenger', 'verdict'])
    )
    if len(algorithms) >= 2:
        scores = rank_scores(means)
        report.ranks = dict(zip(algorithms, scores.tolist()))
        report.holm = holm_procedure(
            scores, algorithms.index(reference), len(problems), delta, labels=algorithms
        )
    return report
