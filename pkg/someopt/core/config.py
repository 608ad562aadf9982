"""Experiment configuration: YAML sections validated into pydantic models."""

import os
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Sequence, Union

import yaml
from dotenv import load_dotenv
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from benchmarks import CEC2008_IDS, SUITE_IDS
from iir import IIR_PROBLEM_ID
from utils import get_logger, log_kv

from .coordinator import SomeParameters, Variant
from .errors import ConfigError
from .types import Problem

logger = get_logger("config")

OUTPUT_DIR_ENV = "SOMEOPT_OUTPUT_DIR"
DEFAULT_OUTPUT_DIR = "results"
# run.py lives here; relative data paths such as output.published resolve against it
PACKAGE_DIR = Path(__file__).resolve().parent.parent
ALGORITHM_IDS = [variant.value for variant in Variant]


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid")


class ExperimentSection(_Section):
    suite: Union[Literal["all", "cec2008", "iir"], List[str]] = "all"
    algorithms: List[str] = Field(default_factory=lambda: [Variant.THREE_SOME.value])
    runs: int = Field(30, ge=1)
    master_seed: int = 0
    workers: int = Field(1, ge=1)
    reference: Optional[str] = None
    significance: float = Field(0.05, gt=0.0, lt=1.0)
    iir_noise_seed: int = 0

    @field_validator('suite')
    @classmethod
    def _known_problems(cls, value):
        if isinstance(value, list):
            if not value:
                raise ValueError("suite list is empty")
            unknown = [pid for pid in value if pid not in SUITE_IDS and pid != IIR_PROBLEM_ID]
            if unknown:
                raise ValueError(f"unknown problem id(s): {', '.join(unknown)}")
        return value

    @field_validator('algorithms')
    @classmethod
    def _known_algorithms(cls, value):
        if not value:
            raise ValueError("at least one algorithm is required")
        unknown = [algo for algo in value if algo not in ALGORITHM_IDS]
        if unknown:
            raise ValueError(
                f"unknown algorithm id(s): {', '.join(unknown)} (expected one of {', '.join(ALGORITHM_IDS)})"
            )
        if len(set(value)) != len(value):
            raise ValueError("algorithm ids must be unique")
        return value

    @model_validator(mode="after")
    def _reference_is_run(self):
        if self.reference is not None and self.reference not in self.algorithms:
            raise ValueError(f"reference {self.reference} is not among the algorithms")
        return self

    @property
    def reference_algorithm(self) -> str:
        """Configured reference, else 3SOME when it runs, else the first algorithm."""
        if self.reference is not None:
            return self.reference
        if Variant.THREE_SOME.value in self.algorithms:
            return Variant.THREE_SOME.value
        return self.algorithms[0]


class BudgetSection(_Section):
    multiplier: int = Field(5000, ge=1)
    iir_evaluations: int = Field(10000, ge=1)
    evaluations: Optional[int] = Field(None, ge=1)


class OutputSection(_Section):
    dir: Optional[str] = None
    trend_points: int = Field(200, ge=1)
    published: Optional[str] = "knowledge/published_results.csv"


class LoggingSection(_Section):
    level: Literal["DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"] = "INFO"


class ExperimentConfig(_Section):
    """Everything a run of the experiment driver needs."""
    experiment: ExperimentSection = Field(default_factory=ExperimentSection)
    budget: BudgetSection = Field(default_factory=BudgetSection)
    algorithm: SomeParameters = Field(default_factory=SomeParameters)
    output: OutputSection = Field(default_factory=OutputSection)
    logging: LoggingSection = Field(default_factory=LoggingSection)

    def problem_ids(self) -> List[str]:
        """Problem ids in canonical order (suite order, then the filter problem)."""
        suite = self.experiment.suite
        if suite == "all":
            return list(SUITE_IDS)
        if suite == "cec2008":
            return list(CEC2008_IDS)
        if suite == "iir":
            return [IIR_PROBLEM_ID]
        ids = [pid for pid in SUITE_IDS if pid in suite]
        if IIR_PROBLEM_ID in suite:
            ids.append(IIR_PROBLEM_ID)
        return ids

    def budget_for(self, problem: Problem) -> int:
        """Evaluations per run: the flat override, else 10000 for the filter, else multiplier * n."""
        if self.budget.evaluations is not None:
            return self.budget.evaluations
        if problem.label == IIR_PROBLEM_ID:
            return self.budget.iir_evaluations
        return self.budget.multiplier * problem.dimension

    @property
    def output_dir(self) -> Path:
        return Path(self.output.dir or DEFAULT_OUTPUT_DIR)

    @property
    def published_path(self) -> Optional[Path]:
        """Published results table, relative paths taken from the package directory."""
        if self.output.published is None:
            return None
        path = Path(self.output.published)
        return path if path.is_absolute() else PACKAGE_DIR / path


def _line_of(node: Optional[yaml.Node], loc: Sequence[Any]) -> Optional[int]:
    """1-based line of the deepest YAML node reachable along a pydantic error location."""
    line = None
    for key in loc:
        if node is None:
            break
        line = node.start_mark.line + 1
        if isinstance(node, yaml.MappingNode):
            node = next((v for k, v in node.value if k.value == key), None)
        elif isinstance(node, yaml.SequenceNode) and isinstance(key, int) and key < len(node.value):
            node = node.value[key]
        else:
            node = None
    if node is not None:
        line = node.start_mark.line + 1
    return line


def _diagnostics(error: ValidationError, root: Optional[yaml.Node]) -> List[str]:
    messages = []
    for item in error.errors():
        path = ".".join(str(part) for part in item['loc']) or "<root>"
        line = _line_of(root, item['loc'])
        where = f" (line {line})" if line else ""
        messages.append(f"{path}{where}: {item['msg']}")
    return messages


def validate_config(text: str) -> ExperimentConfig:
    """
    Parse, default and validate configuration text.

    Args:
        text: YAML document; empty text gives every default

    Returns:
        Validated configuration

    Raises:
        ConfigError: on YAML syntax errors or invalid/unknown fields
    """
    try:
        raw = yaml.safe_load(text) if text.strip() else None
        root = yaml.compose(text) if text.strip() else None
    except yaml.YAMLError as e:
        mark = getattr(e, 'problem_mark', None)
        where = f"line {mark.line + 1}, column {mark.column + 1}" if mark else "unknown position"
        raise ConfigError("Invalid YAML", [f"{where}: {getattr(e, 'problem', None) or e}"]) from e

    if raw is None:
        raw = {}
    if not isinstance(raw, dict):
        raise ConfigError("Invalid configuration", ["<root>: expected a mapping of sections"])

    try:
        return ExperimentConfig.model_validate(raw)
    except ValidationError as e:
        raise ConfigError("Invalid configuration", _diagnostics(e, root)) from e


def _merge(base: Dict[str, Any], overrides: Dict[str, Any]) -> Dict[str, Any]:
    merged = dict(base)
    for key, value in overrides.items():
        if isinstance(value, dict) and isinstance(merged.get(key), dict):
            merged[key] = _merge(merged[key], value)
        else:
            merged[key] = value
    return merged


def load_config(config_path: Optional[str] = None,
                overrides: Optional[Dict[str, Dict[str, Any]]] = None) -> ExperimentConfig:
    """
    Load configuration from file or use defaults, then apply overrides.

    Precedence: overrides (command-line flags) > file > SOMEOPT_OUTPUT_DIR > defaults.

    Args:
        config_path: YAML file; a missing file means defaults
        overrides: Section -> {field: value} taking precedence over the file

    Returns:
        Validated configuration
    """
    load_dotenv()
    config = ExperimentConfig()
    source = "defaults"
    if config_path and Path(config_path).exists():
        config = validate_config(Path(config_path).read_text(encoding="utf-8"))
        source = config_path

    if overrides:
        data = _merge(config.model_dump(exclude_unset=True), overrides)
        try:
            config = ExperimentConfig.model_validate(data)
        except ValidationError as e:
            raise ConfigError("Invalid command-line options", _diagnostics(e, None)) from e

    if config.output.dir is None and os.getenv(OUTPUT_DIR_ENV):
        config.output.dir = os.environ[OUTPUT_DIR_ENV]

    log_kv(
        logger, "config.loaded", source=source, problems=len(config.problem_ids()),
        algorithms=config.experiment.algorithms, runs=config.experiment.runs
    )
    return config
