# stats/__init__.py
"""Statistical comparison of optimizers: Wilcoxon verdicts, rank scores, Holm."""

from .holm import HolmRow, Hypothesis, holm_procedure, rank_scores
from .summary import StatReport, mean_std, summarize
from .wilcoxon import Verdict, wilcoxon_verdict

__all__ = [
    'HolmRow',
    'Hypothesis',
    'holm_procedure',
    'rank_scores',
    'StatReport',
    'mean_std',
    'summarize',
    'Verdict',
    'wilcoxon_verdict'
]
