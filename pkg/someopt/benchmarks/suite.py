"""The thirty-problem test suite: specs, seeded instances and the manifest."""

from dataclasses import asdict, dataclass
from functools import lru_cache
from typing import Any, Callable, Dict, Iterable, List, Optional

import numpy as np
import pandas as pd

from core.errors import DimensionMismatch, InvalidParameter
from core.rng import derive_seed, make_rng
from core.types import Domain, Problem
from utils import get_logger, log_kv

from . import functions as fn
from .transforms import generate_rotation, generate_shift

logger = get_logger("benchmarks")

CEC2008_IDS = [f"f{i}" for i in range(24, 31)]

KERNELS: Dict[str, Callable[..., np.ndarray]] = {
    'sphere': fn.sphere,
    'schwefel_1_2': fn.schwefel_1_2,
    'rosenbrock': fn.rosenbrock,
    'ackley': fn.ackley,
    'griewank': fn.griewank,
    'rastrigin': fn.rastrigin,
    'noncontinuous_rastrigin': fn.noncontinuous_rastrigin,
    'schwefel': fn.schwefel,
    'schwefel_2_22': fn.schwefel_2_22,
    'schwefel_2_21': fn.schwefel_2_21,
    'penalized_1': fn.penalized_1,
    'penalized_2': fn.penalized_2,
    'schwefel_2_6': fn.schwefel_2_6,
    'weierstrass': fn.weierstrass,
    'schwefel_2_13': fn.schwefel_2_13,
    'michalewicz': fn.michalewicz,
    'fast_fractal': fn.fast_fractal,
}

# Kernels that consume the shift o through their own data instead of z = x - o.
SHIFT_IN_DATA = {'schwefel_2_6', 'schwefel_2_13'}


@dataclass(frozen=True)
class ProblemSpec:
    """One test problem: formula, dimension, bounds, properties and seed."""
    id: str
    name: str
    kernel: str
    dimension: int
    lower: float
    upper: float
    multimodal: bool
    separable: bool
    shifted: bool = False
    rotated: bool = False
    condition: float = 1.0
    offset: float = 0.0
    known_optimum: Optional[float] = 0.0
    seed: int = 0

    def domain(self) -> Domain:
        return Domain.box(self.dimension, self.lower, self.upper)


def _entry(id: str, name: str, kernel: str, n: int, bounds, multimodal: bool,
           separable: bool, **extra) -> ProblemSpec:
    return ProblemSpec(id, name, kernel, n, float(bounds[0]), float(bounds[1]),
                       multimodal, separable, **extra)


SUITE_TABLE: List[ProblemSpec] = [
    _entry('f1', 'Shifted sphere', 'sphere', 30, (-100, 100), False, True, shifted=True),
    _entry('f2', "Shifted Schwefel's problem 1.2", 'schwefel_1_2', 30, (-100, 100), False, False, shifted=True),
    _entry('f3', "Rosenbrock's function", 'rosenbrock', 30, (-100, 100), True, False),
    _entry('f4', "Shifted Ackley's function", 'ackley', 30, (-32, 32), True, False, shifted=True),
    _entry('f5', "Shifted rotated Ackley's function", 'ackley', 30, (-32, 32), True, False,
           shifted=True, rotated=True, condition=1.0),
    _entry('f6', "Shifted Griewank's function", 'griewank', 30, (-600, 600), True, False, shifted=True),
    _entry('f7', "Shifted rotated Griewank's function", 'griewank', 30, (-600, 600), True, False,
           shifted=True, rotated=True, condition=3.0),
    _entry('f8', "Shifted Rastrigin's function", 'rastrigin', 30, (-5, 5), True, True, shifted=True),
    _entry('f9', "Shifted rotated Rastrigin's function", 'rastrigin', 30, (-5, 5), True, False,
           shifted=True, rotated=True, condition=3.0),
    _entry('f10', "Shifted non continuous Rastrigin's function", 'noncontinuous_rastrigin', 30,
           (-500, 500), True, True, shifted=True),
    _entry('f11', "Schwefel's function", 'schwefel', 30, (-500, 500), True, True),
    _entry('f12', "Schwefel's problem 2.22", 'schwefel_2_22', 10, (-10, 10), False, True),
    _entry('f13', "Schwefel's problem 2.21", 'schwefel_2_21', 10, (-100, 100), False, False),
    _entry('f14', 'Generalized penalized function 1', 'penalized_1', 10, (-50, 50), True, True),
    _entry('f15', 'Generalized penalized function 2', 'penalized_2', 10, (-50, 50), True, True,
           known_optimum=None),
    _entry('f16', "Schwefel's problem 2.6", 'schwefel_2_6', 30, (-100, 100), False, False, shifted=True),
    _entry('f17', 'Shifted rotated Weierstrass function', 'weierstrass', 30, (-0.5, 0.5), True, False,
           shifted=True, rotated=True, condition=5.0),
    _entry('f18', "Schwefel's problem 2.13", 'schwefel_2_13', 30, (-np.pi, np.pi), True, False, shifted=True),
    _entry('f19', "Shifted rotated Rastrigin's function", 'rastrigin', 50, (-5, 5), True, False,
           shifted=True, rotated=True, condition=3.0),
    _entry('f20', "Michalewicz's function", 'michalewicz', 50, (0, np.pi), True, True, known_optimum=None),
    _entry('f21', "Schwefel's function", 'schwefel', 50, (-500, 500), True, True),
    _entry('f22', "Michalewicz's function", 'michalewicz', 100, (0, np.pi), True, True, known_optimum=None),
    _entry('f23', "Schwefel's function", 'schwefel', 100, (-500, 500), True, True),
    _entry('f24', 'Shifted sphere', 'sphere', 100, (-100, 100), False, True, shifted=True),
    _entry('f25', "Shifted Schwefel's problem 2.21", 'schwefel_2_21', 100, (-100, 100), False, False,
           shifted=True),
    _entry('f26', "Shifted Rosenbrock's function", 'rosenbrock', 100, (-100, 100), True, False,
           shifted=True, offset=1.0),
    _entry('f27', "Shifted Rastrigin's function", 'rastrigin', 100, (-5, 5), True, True, shifted=True),
    _entry('f28', "Shifted Griewank's function", 'griewank', 100, (-600, 600), True, False, shifted=True),
    _entry('f29', "Shifted Ackley's function", 'ackley', 100, (-32, 32), True, False, shifted=True),
    _entry('f30', 'FastFractal DoubleDip function', 'fast_fractal', 100, (-1, 1), True, False,
           known_optimum=None),
]

SUITE_IDS = [spec.id for spec in SUITE_TABLE]


class BenchmarkFunction:
    """Picklable evaluator of one ProblemSpec with its regenerated shift, rotation and data."""

    def __init__(self, spec: ProblemSpec):
        self.spec = spec
        n = spec.dimension
        self.shift = generate_shift(n, spec.domain(), spec.seed).o if spec.shifted else None
        self.rotation = (
            generate_rotation(n, spec.condition, derive_seed(spec.seed, spec.id, 'rotation', 0)).matrix
            if spec.rotated else None
        )
        self.data = self._kernel_data()
        self.kernel = KERNELS[spec.kernel]

    def _kernel_data(self) -> Dict[str, Any]:
        spec = self.spec
        n = spec.dimension
        rng = make_rng(derive_seed(spec.seed, spec.id, 'data', 0))

        if spec.kernel == 'schwefel_2_6':
            a_matrix = rng.integers(-500, 501, size=(n, n)).astype(float)
            while abs(np.linalg.det(a_matrix)) < 1.0:
                a_matrix = rng.integers(-500, 501, size=(n, n)).astype(float)
            return {'a_matrix': a_matrix, 'b_vector': self.shift @ a_matrix.T}

        if spec.kernel == 'schwefel_2_13':
            a_matrix = rng.integers(-100, 101, size=(n, n)).astype(float)
            b_matrix = rng.integers(-100, 101, size=(n, n)).astype(float)
            target = fn.schwefel_2_13_terms(self.shift, a_matrix, b_matrix)
            return {'a_matrix': a_matrix, 'b_matrix': b_matrix, 'target': target}

        if spec.kernel == 'fast_fractal':
            centres, scales = fn.fractal_dips(spec.seed)
            return {'centres': centres, 'scales': scales}

        return {}

    def transform(self, x: np.ndarray) -> np.ndarray:
        """z = M (x - o + offset), skipping the steps this problem does not use."""
        z = x
        if self.shift is not None and self.spec.kernel not in SHIFT_IN_DATA:
            z = z - self.shift + self.spec.offset
        if self.rotation is not None:
            z = z @ self.rotation.T
        return z

    def __call__(self, x: np.ndarray) -> float:
        x = np.asarray(x, dtype=float)
        if x.shape[-1] != self.spec.dimension:
            raise DimensionMismatch(self.spec.dimension, x.shape[-1])
        return float(self.kernel(self.transform(x), **self.data))


@lru_cache(maxsize=64)
def _function_for(spec: ProblemSpec) -> BenchmarkFunction:
    return BenchmarkFunction(spec)


def eval_benchmark(spec: ProblemSpec, x: np.ndarray) -> float:
    """Evaluate one suite problem at x (bias is zero throughout)."""
    return _function_for(spec)(x)


def problem_specs(master_seed: int, ids: Optional[Iterable[str]] = None) -> List[ProblemSpec]:
    """Seeded specs for the selected ids, in suite order."""
    wanted = list(SUITE_IDS if ids is None else ids)
    unknown = sorted(set(wanted) - set(SUITE_IDS))
    if unknown:
        raise InvalidParameter(f"Unknown problem ids: {', '.join(unknown)}")
    by_id = {spec.id: spec for spec in SUITE_TABLE}
    return [
        ProblemSpec(**{**asdict(by_id[pid]), 'seed': derive_seed(master_seed, pid, 'suite', 0)})
        for pid in wanted
    ]


def to_problem(spec: ProblemSpec) -> Problem:
    return Problem(
        dimension=spec.dimension,
        domain=spec.domain(),
        evaluator=_function_for(spec),
        label=spec.id,
        known_optimum=spec.known_optimum,
        metadata={
            'name': spec.name,
            'seed': spec.seed,
            'modality': 'multimodal' if spec.multimodal else 'unimodal',
            'separability': 'separable' if spec.separable else 'non-separable',
            'rotated': spec.rotated,
            'shifted': spec.shifted,
        }
    )


def make_suite(master_seed: int, ids: Optional[Iterable[str]] = None) -> List[Problem]:
    """
    Instantiate the suite (all 30 problems unless ``ids`` narrows it).

    Args:
        master_seed: Seed every shift, rotation and data matrix derives from
        ids: Optional subset of problem ids, kept in the given order

    Returns:
        Problems ready for the optimizer
    """
    problems = [to_problem(spec) for spec in problem_specs(master_seed, ids)]
    log_kv(logger, "suite.built", problems=len(problems), master_seed=master_seed)
    return problems


def manifest(problems: Iterable[Problem]) -> pd.DataFrame:
    """Provenance table: one row per problem."""
    rows = []
    for problem in problems:
        meta = problem.metadata
        rows.append({
            'id': problem.label,
            'name': meta.get('name', problem.label),
            'n': problem.dimension,
            'lower': float(problem.domain.lower.min()),
            'upper': float(problem.domain.upper.max()),
            'seed': meta.get('seed', ''),
            'modality': meta.get('modality', ''),
            'separability': meta.get('separability', ''),
            'rotated': meta.get('rotated', False),
            'shifted': meta.get('shifted', False),
        })
    return pd.DataFrame(rows, columns=['id', 'name', 'n', 'lower', 'upper', 'seed', 'modality',
                                       'separability', 'rotated', 'shifted'])
