#!/usr/bin/env python3
"""Main entry point for the 3SOME experiment driver."""

import sys
from pathlib import Path
from typing import Any, Dict

import click
from rich.console import Console
from rich.table import Table

# Add project root to path
sys.path.insert(0, str(Path(__file__).parent))

from benchmarks import make_suite, manifest
from core.config import ALGORITHM_IDS, load_config
from core.errors import ConfigError
from core.orchestrator import ExperimentRunner
from iir import make_iir_problem
from utils import get_logger

logger = get_logger("main")

EXIT_CONFIG_ERROR = 1
EXIT_RUNTIME_ERROR = 2


def _fail(error: Exception) -> None:
    if isinstance(error, ConfigError):
        click.echo(f"Configuration error: {error}", err=True)
        sys.exit(EXIT_CONFIG_ERROR)
    click.echo(f"Error: {error}", err=True)
    sys.exit(EXIT_RUNTIME_ERROR)


def _overrides(**flags) -> Dict[str, Dict[str, Any]]:
    """Map command-line flags onto config sections, skipping flags left unset."""
    sections = {
        'suite': ('experiment', 'suite'),
        'algorithms': ('experiment', 'algorithms'),
        'runs': ('experiment', 'runs'),
        'seed': ('experiment', 'master_seed'),
        'workers': ('experiment', 'workers'),
        'reference': ('experiment', 'reference'),
        'multiplier': ('budget', 'multiplier'),
        'budget': ('budget', 'evaluations'),
        'out': ('output', 'dir'),
    }
    overrides: Dict[str, Dict[str, Any]] = {}
    for flag, value in flags.items():
        if value is None or value == ():
            continue
        section, key = sections[flag]
        overrides.setdefault(section, {})[key] = value
    return overrides


def _suite_value(suite):
    if suite is None or suite in ("all", "cec2008", "iir"):
        return suite
    return [pid.strip() for pid in suite.split(",") if pid.strip()]


@click.group()
@click.option('--config', default='config/config.yaml', help='Configuration file path')
@click.pass_context
def cli(ctx, config):
    """3SOME - single-solution memetic optimizer and its benchmark experiments."""
    ctx.ensure_object(dict)
    ctx.obj['config'] = config


@cli.command()
@click.option('--suite', help='all, cec2008, iir or a comma-separated list of problem ids')
@click.option('--algo', 'algorithms', multiple=True,
              help=f"Algorithm variant, one of {', '.join(ALGORITHM_IDS)} (repeatable)")
@click.option('--runs', type=int, help='Independent runs per (problem, algorithm)')
@click.option('--budget-multiplier', 'multiplier', type=int, help='Evaluations per run = multiplier * n')
@click.option('--budget', type=int, help='Flat evaluations per run for every problem')
@click.option('--seed', type=int, help='Master seed')
@click.option('--out', help='Output directory')
@click.option('--workers', type=int, help='Worker processes')
@click.option('--reference', help='Algorithm the statistics compare against')
@click.pass_context
def run(ctx, suite, algorithms, runs, multiplier, budget, seed, out, workers, reference):
    """Run an experiment and write its report files."""
    try:
        config = load_config(ctx.obj['config'], _overrides(
            suite=_suite_value(suite), algorithms=list(algorithms) or None, runs=runs,
            multiplier=multiplier, budget=budget, seed=seed, out=out, workers=workers,
            reference=reference
        ))
        exp = config.experiment
        click.echo(f"Running {', '.join(exp.algorithms)} on {len(config.problem_ids())} problems, "
                   f"{exp.runs} runs each")
        report = ExperimentRunner(config).run()
    except Exception as e:
        _fail(e)
        return

    if not report.wilcoxon.empty:
        counts = report.wilcoxon.groupby(['challenger', 'verdict']).size().unstack(fill_value=0)
        click.echo(f"\nWilcoxon verdicts against {report.reference}:")
        for challenger, row in counts.iterrows():
            click.echo(f"  {challenger}: " + "  ".join(f"{v}{row[v]}" for v in row.index))
    click.echo(f"Reports written to: {config.output_dir}")


@cli.command(name='list')
@click.option('--seed', type=int, help='Master seed')
@click.option('--iir/--no-iir', default=True, help='Include the filter identification problem')
@click.pass_context
def list_problems(ctx, seed, iir):
    """Print the benchmark manifest."""
    try:
        config = load_config(ctx.obj['config'], _overrides(seed=seed))
        problems = make_suite(config.experiment.master_seed)
        if iir:
            problems.append(make_iir_problem(config.experiment.iir_noise_seed))
    except Exception as e:
        _fail(e)
        return

    frame = manifest(problems)
    table = Table(title="Benchmark problems")
    for column in frame.columns:
        table.add_column(column, justify="right" if column in ('n', 'lower', 'upper', 'seed') else "left")
    for row in frame.itertuples(index=False):
        table.add_row(*(f"{v:g}" if isinstance(v, float) else str(v) for v in row))
    Console(width=200).print(table)


@cli.command()
@click.option('--runs-dir', type=click.Path(file_okay=False), help='Directory of stored runs')
@click.option('--out', help='Output directory')
@click.pass_context
def stats(ctx, runs_dir, out):
    """Recompute the reports from stored runs."""
    try:
        config = load_config(ctx.obj['config'], _overrides(out=out))
        report = ExperimentRunner(config).recompute(Path(runs_dir) if runs_dir else None)
    except Exception as e:
        _fail(e)
        return

    click.echo(f"Recomputed reports for {report.results['problem'].nunique()} problems "
               f"against {report.reference}")
    click.echo(f"Reports written to: {config.output_dir}")


if __name__ == '__main__':
    cli()
