"""Rank scores over a testbed and the Holm step-down procedure against a reference."""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from scipy.stats import norm, rankdata

from core.errors import InvalidParameter


class Hypothesis(str, Enum):
    REJECTED = "Rejected"
    ACCEPTED = "Accepted"


@dataclass
class HolmRow:
    """One challenger compared against the reference algorithm."""
    j_index: int
    algorithm: str
    z: float
    p: float
    threshold: float
    hypothesis: Hypothesis

    def to_dict(self) -> Dict[str, Any]:
        return {
            'j': self.j_index,
            'algorithm': self.algorithm,
            'z': self.z,
            'p': self.p,
            'threshold': self.threshold,
            'hypothesis': self.hypothesis.value
        }


def rank_scores(results: np.ndarray) -> np.ndarray:
    """
    Average per-problem score of every algorithm.

    On each problem the best (lowest) mean scores N_A, the next N_A - 1 and
    so on down to 1; tied algorithms share the mean of their positions.

    Args:
        results: Mean final fitness, shape (algorithms, problems)

    Returns:
        Score vector R of length N_A
    """
    results = np.asarray(results, dtype=float)
    if results.ndim != 2 or results.shape[0] < 1 or results.shape[1] < 1:
        raise InvalidParameter("rank_scores needs a non-empty algorithms x problems matrix")
    n_algorithms = results.shape[0]
    scores = n_algorithms + 1 - rankdata(results, method="average", axis=0)
    return scores.mean(axis=1)


def holm_procedure(R: Sequence[float], reference_index: int, n_problems: int,
                   delta: float = 0.05, labels: Optional[Sequence[str]] = None) -> List[HolmRow]:
    """
    Compare every algorithm's score with the reference's.

    z_j = (R_j - R_0) / sqrt(N_A (N_A + 1) / (6 N_TP)) and p_j is the lower
    tail of the standard normal at z_j. Rows are sorted by ascending p; the
    row at sorted position j (1-based) is tested against delta / (N_A - j).
    Once a hypothesis is accepted every later row is accepted too.

    Args:
        R: Rank scores of all N_A algorithms
        reference_index: Position of the reference in R
        n_problems: Number of problems N_TP the scores were averaged over
        delta: Family-wise significance level
        labels: Algorithm names, defaults to their indices

    Returns:
        N_A - 1 rows, ascending by p
    """
    R = np.asarray(R, dtype=float)
    n_algorithms = R.shape[0]
    if n_algorithms < 2:
        raise InvalidParameter("Holm procedure needs at least two algorithms")
    if n_problems <= 0:
        raise InvalidParameter(f"Number of problems must be positive, got {n_problems}")
    if not 0 <= reference_index < n_algorithms:
        raise InvalidParameter(f"Reference index {reference_index} out of range")
    labels = list(labels) if labels is not None else [str(i) for i in range(n_algorithms)]

    se = np.sqrt(n_algorithms * (n_algorithms + 1) / (6.0 * n_problems))
    challengers = [i for i in range(n_algorithms) if i != reference_index]
    z_values = {i: (R[i] - R[reference_index]) / se for i in challengers}
    p_values = {i: float(norm.cdf(z_values[i])) for i in challengers}
    ordered = sorted(challengers, key=lambda i: (p_values[i], i))

    rows = []
    accepted = False
    for position, i in enumerate(ordered, start=1):
        threshold = delta / (n_algorithms - position)
        accepted = accepted or not p_values[i] < threshold
        rows.append(HolmRow(
            j_index=n_algorithms - position,
            algorithm=labels[i],
            z=float(z_values[i]),
            p=p_values[i],
            threshold=threshold,
            hypothesis=Hypothesis.ACCEPTED if accepted else Hypothesis.REJECTED
        ))
    return rows
