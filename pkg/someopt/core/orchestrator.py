"""Experiment driver: builds problems, runs every batch, stores runs and writes reports."""

from pathlib import Path
from typing import Dict, List, Optional

from benchmarks import SUITE_IDS, make_suite
from iir import IIR_PROBLEM_ID, make_iir_problem
from stats import StatReport
from utils import get_logger, instrument, log_kv, set_level

from .config import ExperimentConfig
from .coordinator import RunResult, SomeConfig, Variant, run_batch
from .reports import write_reports
from .state_manager import RunStore
from .types import Problem

logger = get_logger("orchestrator")


class ExperimentRunner:
    """Runs one configured experiment end to end."""

    def __init__(self, config: ExperimentConfig):
        """Initialize the runner.

        Args:
            config: Validated experiment configuration
        """
        self.config = config
        set_level(config.logging.level)
        self.out_dir = config.output_dir
        self.store = RunStore(str(self.out_dir / 'runs'))

    def build_problems(self) -> Dict[str, Problem]:
        """Problems of the configured suite, keyed by id in canonical order."""
        ids = self.config.problem_ids()
        suite_ids = [pid for pid in ids if pid in SUITE_IDS]
        problems: Dict[str, Problem] = {}
        if suite_ids:
            problems.update((p.label, p) for p in make_suite(self.config.experiment.master_seed, suite_ids))
        if IIR_PROBLEM_ID in ids:
            problems[IIR_PROBLEM_ID] = make_iir_problem(self.config.experiment.iir_noise_seed)
        return problems

    def optimizer_config(self, algorithm: str) -> SomeConfig:
        return SomeConfig(**self.config.algorithm.model_dump(), variant=Variant(algorithm))

    def run_pair(self, problem: Problem, algorithm: str) -> List[RunResult]:
        """All runs of one algorithm on one problem, persisted before returning."""
        exp = self.config.experiment
        results = run_batch(
            problem,
            self.optimizer_config(algorithm),
            self.config.budget_for(problem),
            exp.runs,
            exp.master_seed,
            workers=exp.workers
        )
        self.store.save(problem.label, algorithm, results)
        return results

    @instrument("experiment")
    def run(self) -> StatReport:
        """
        Execute every (problem, algorithm) batch, then write the reports.

        Returns:
            Statistics behind the written tables
        """
        exp = self.config.experiment
        problems = self.build_problems()
        log_kv(
            logger, "experiment.start", problems=len(problems), algorithms=exp.algorithms,
            runs=exp.runs, master_seed=exp.master_seed, workers=exp.workers, out_dir=str(self.out_dir)
        )

        runs: Dict[str, Dict[str, List[RunResult]]] = {}
        for pid, problem in problems.items():
            for algorithm in exp.algorithms:
                runs.setdefault(pid, {})[algorithm] = self.run_pair(problem, algorithm)

        report = write_reports(
            self.out_dir, runs, exp.reference_algorithm, exp.significance,
            self.config.output.trend_points, problems, self.config.published_path
        )
        log_kv(logger, "experiment.complete", problems=len(problems), out_dir=str(self.out_dir))
        return report

    @instrument("stats")
    def recompute(self, runs_dir: Optional[Path] = None) -> StatReport:
        """Regenerate the reports from stored runs without running the optimizer again."""
        store = RunStore(str(runs_dir)) if runs_dir else self.store
        runs = store.load_all()
        if not runs:
            raise FileNotFoundError(f"No stored runs under {store.root}")
        ordered = {pid: runs[pid] for pid in [*SUITE_IDS, IIR_PROBLEM_ID] if pid in runs}
        problems = self.build_problems()
        algorithms = [a for a in self.config.experiment.algorithms if all(a in r for r in ordered.values())]
        reference = self.config.experiment.reference_algorithm
        if reference not in algorithms:
            # Stored runs may come from a different experiment than the current config
            algorithms = sorted(set.intersection(*(set(r) for r in ordered.values())))
            if not algorithms:
                raise FileNotFoundError(f"No algorithm has stored runs for every problem under {store.root}")
            reference = Variant.THREE_SOME.value if Variant.THREE_SOME.value in algorithms else algorithms[0]
        table = {pid: {a: by_algo[a] for a in algorithms} for pid, by_algo in ordered.items()}
        return write_reports(
            self.out_dir, table, reference, self.config.experiment.significance,
            self.config.output.trend_points,
            {pid: p for pid, p in problems.items() if pid in table},
            self.config.published_path
        )


def run_experiment(config: ExperimentConfig) -> StatReport:
    """Run a configured experiment and write its report files."""
    return ExperimentRunner(config).run()
