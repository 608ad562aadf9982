"""CSV reports of an experiment: result tables, verdicts, Holm table and trends."""

from pathlib import Path
from typing import Dict, List, Mapping, Optional, Sequence, Union

import numpy as np
import pandas as pd

from benchmarks import manifest
from iir import PLANT_DENOMINATOR, FilterCoeffs, IIRProblem, IIR_PROBLEM_ID, filter_response, pole_moduli
from stats import StatReport, mean_std, summarize
from utils import get_logger, log_kv

from .coordinator import RunResult
from .types import WORST, Problem

logger = get_logger("reports")

FLOAT_FORMAT = "%.6e"
COMPARISON_COLUMNS = ['experiment', 'problem', 'algorithm', 'mean', 'std', 'source']

# problem -> algorithm -> runs in run-index order
RunTable = Mapping[str, Mapping[str, Sequence[RunResult]]]


def final_fitness(runs: RunTable) -> Dict[str, Dict[str, List[float]]]:
    return {
        problem: {algorithm: [r.best.fitness for r in results] for algorithm, results in by_algo.items()}
        for problem, by_algo in runs.items()
    }


def mean_trend(results: Sequence[RunResult], points: int = 200) -> pd.DataFrame:
    """
    Mean best-so-far fitness over runs on a fixed evaluation grid.

    The grid has ``points`` checkpoints spaced budget / points apart, the budget
    being the largest evaluation count among the runs. Each run contributes its
    best fitness at the last trajectory point not after the checkpoint.

    Args:
        results: Runs of one (problem, algorithm) pair
        points: Number of checkpoints

    Returns:
        DataFrame with columns evaluations, mean_best_fitness
    """
    budget = max(r.evaluations_used for r in results)
    grid = np.unique(np.ceil(np.arange(1, points + 1) * budget / points).astype(int))
    curves = np.empty((len(results), grid.size))
    for row, result in enumerate(results):
        evals = np.array([e for e, _ in result.trajectory], dtype=int)
        fitness = np.array([f for _, f in result.trajectory], dtype=float)
        idx = np.searchsorted(evals, grid, side='right') - 1
        curves[row] = np.where(idx >= 0, fitness[np.clip(idx, 0, None)], WORST)
    means = [mean_std(curves[:, col])[0] for col in range(grid.size)]
    return pd.DataFrame({'evaluations': grid, 'mean_best_fitness': means})


def comparison_table(report: StatReport, published: Optional[Union[str, Path]] = None) -> pd.DataFrame:
    """Computed mean/std rows, followed by the published rows for the same problems."""
    computed = report.results[['problem', 'algorithm', 'mean', 'std']].copy()
    computed.insert(0, 'experiment', 'computed')
    computed['source'] = 'computed'
    frames = [computed]
    if published and Path(published).exists():
        reference = pd.read_csv(published, dtype={'problem': str, 'algorithm': str})
        frames.append(reference[reference['problem'].isin(computed['problem'].unique())])
    elif published:
        logger.warning(f"Published results file not found: {published}")
    return pd.concat(frames, ignore_index=True)[COMPARISON_COLUMNS]


def iir_tables(problem: Problem, best: RunResult) -> Dict[str, pd.DataFrame]:
    """Plant versus best-filter outputs and pole moduli for the filter problem."""
    signals = problem.evaluator.signals
    coeffs = FilterCoeffs.unpack(best.best.genes)
    y_best = filter_response(coeffs, signals.u)
    outputs = pd.DataFrame({
        'k': np.arange(1, signals.n_samples + 1),
        'u': signals.u,
        'd': signals.d,
        'y_best': y_best,
    })
    plant_poles = pole_moduli(-PLANT_DENOMINATOR[1:])
    best_poles = pole_moduli(coeffs.b)
    poles = pd.DataFrame({
        'filter': ['plant'] * plant_poles.size + ['best'] * best_poles.size,
        'index': list(range(plant_poles.size)) + list(range(best_poles.size)),
        'modulus': np.concatenate([plant_poles, best_poles]),
    })
    return {'iir_signals.csv': outputs, 'iir_poles.csv': poles}


def _write(frame: pd.DataFrame, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    frame.to_csv(path, index=False, float_format=FLOAT_FORMAT, encoding='utf-8')
    return path


def write_reports(out_dir: Path, runs: RunTable, reference: str, significance: float = 0.05,
                  trend_points: int = 200, problems: Optional[Mapping[str, Problem]] = None,
                  published: Optional[Union[str, Path]] = None) -> StatReport:
    """
    Write every report file of an experiment.

    Args:
        out_dir: Output directory
        runs: problem -> algorithm -> runs
        reference: Algorithm the verdicts and the Holm table refer to
        significance: Level of the Wilcoxon tests and of the Holm procedure
        trend_points: Checkpoints per trend file
        problems: Problem objects by id, for the manifest and the filter outputs
        published: Optional CSV of published results to place in comparison.csv

    Returns:
        The statistics the tables were built from
    """
    out_dir = Path(out_dir)
    report = summarize(final_fitness(runs), reference, significance, significance)
    written = [
        _write(report.results, out_dir / 'results.csv'),
        _write(report.wilcoxon, out_dir / 'wilcoxon.csv'),
        _write(report.holm_frame(), out_dir / 'holm.csv'),
        _write(comparison_table(report, published), out_dir / 'comparison.csv'),
    ]

    for problem, by_algo in runs.items():
        for algorithm, results in by_algo.items():
            written.append(_write(
                mean_trend(results, trend_points), out_dir / 'trends' / f"{problem}_{algorithm}.csv"
            ))

    if problems:
        written.append(_write(manifest(problems.values()), out_dir / 'manifest.csv'))
        iir = problems.get(IIR_PROBLEM_ID)
        if iir is not None and isinstance(iir.evaluator, IIRProblem) and reference in runs.get(IIR_PROBLEM_ID, {}):
            best = min(runs[IIR_PROBLEM_ID][reference], key=lambda r: r.best.fitness)
            for name, frame in iir_tables(iir, best).items():
                written.append(_write(frame, out_dir / name))

    log_kv(logger, "report.written", out_dir=str(out_dir), files=len(written), reference=reference)
    return report
