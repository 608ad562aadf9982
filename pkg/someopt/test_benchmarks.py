#!/usr/bin/env python3
"""Tests for the benchmark kernels, transforms and the suite table."""

import sys
from pathlib import Path

import numpy as np
import pytest
from scipy.optimize import minimize

sys.path.insert(0, str(Path(__file__).parent))

from benchmarks import (
    CEC2008_IDS,
    SUITE_IDS,
    SUITE_TABLE,
    BenchmarkFunction,
    eval_benchmark,
    generate_rotation,
    generate_shift,
    make_suite,
    manifest,
    problem_specs,
)
from benchmarks import functions as fn
from core import DimensionMismatch, Domain, InvalidParameter, make_rng


@pytest.fixture(scope="module")
def specs():
    return {spec.id: spec for spec in problem_specs(0)}


class TestSuiteTable:
    def test_thirty_problems_in_order(self):
        assert SUITE_IDS == [f"f{i}" for i in range(1, 31)]
        assert CEC2008_IDS == [f"f{i}" for i in range(24, 31)]

    def test_cec2008_problems_are_100_dimensional(self, specs):
        assert all(specs[pid].dimension == 100 for pid in CEC2008_IDS)

    @pytest.mark.parametrize("pid, n, lower, upper", [
        ("f1", 30, -100, 100), ("f8", 30, -5, 5), ("f11", 30, -500, 500), ("f12", 10, -10, 10),
        ("f14", 10, -50, 50), ("f17", 30, -0.5, 0.5), ("f20", 50, 0, np.pi), ("f30", 100, -1, 1),
    ])
    def test_dimension_and_bounds(self, specs, pid, n, lower, upper):
        spec = specs[pid]
        assert (spec.dimension, spec.lower, spec.upper) == (n, lower, upper)

    def test_unknown_id_rejected(self):
        with pytest.raises(InvalidParameter):
            problem_specs(0, ["f31"])

    def test_seeds_follow_master_seed(self):
        a = {s.id: s.seed for s in problem_specs(0)}
        b = {s.id: s.seed for s in problem_specs(1)}
        assert len(set(a.values())) == 30
        assert all(a[pid] != b[pid] for pid in SUITE_IDS)


class TestOptima:
    @pytest.mark.parametrize("pid", [spec.id for spec in SUITE_TABLE if spec.shifted])
    def test_shifted_optimum_is_zero(self, specs, pid):
        spec = specs[pid]
        shift = BenchmarkFunction(spec).shift
        assert abs(eval_benchmark(spec, shift)) <= 1e-12

    def test_rosenbrock_at_ones(self, specs):
        assert eval_benchmark(specs["f3"], np.ones(30)) == 0.0
        assert fn.rosenbrock(np.ones(7)) == 0.0

    @pytest.mark.parametrize("pid", ["f12", "f13"])
    def test_origin_optimum(self, specs, pid):
        assert eval_benchmark(specs[pid], np.zeros(specs[pid].dimension)) == 0.0

    def test_penalized_1_at_minus_one(self, specs):
        assert eval_benchmark(specs["f14"], -np.ones(10)) == pytest.approx(0.0, abs=1e-12)

    def test_schwefel_near_known_minimizer(self, specs):
        x = np.full(30, 420.9687)
        assert abs(eval_benchmark(specs["f11"], x)) < 1e-3

    def test_michalewicz_two_dimensional_minimum(self):
        grid = np.linspace(0.0, np.pi, 1001)
        xx, yy = np.meshgrid(grid, grid, indexing="ij")
        values = fn.michalewicz(np.stack([xx, yy], axis=-1))
        i, j = np.unravel_index(np.argmin(values), values.shape)
        refined = minimize(lambda x: float(fn.michalewicz(x)), np.array([grid[i], grid[j]]),
                           method="Nelder-Mead", options={'xatol': 1e-10, 'fatol': 1e-12})
        assert refined.fun == pytest.approx(-1.8013, abs=1e-3)


class TestSeparability:
    @pytest.mark.parametrize("pid", ["f1", "f8", "f11", "f20"])
    def test_coordinate_contributions_are_additive(self, specs, pid):
        spec = specs[pid]
        domain = spec.domain()
        rng = make_rng(5)
        x, y = rng.uniform(domain.lower, domain.upper), rng.uniform(domain.lower, domain.upper)
        a, b = rng.uniform(spec.lower, spec.upper, size=2)

        def delta(point):
            hi, lo = point.copy(), point.copy()
            hi[3], lo[3] = a, b
            return eval_benchmark(spec, hi) - eval_benchmark(spec, lo)

        assert delta(x) == pytest.approx(delta(y), rel=1e-9, abs=1e-9)


class TestTransforms:
    @pytest.mark.parametrize("n, condition", [(30, 1.0), (30, 3.0), (30, 5.0), (50, 3.0)])
    def test_condition_number(self, n, condition):
        matrix = generate_rotation(n, condition, seed=17).matrix
        singular = np.linalg.svd(matrix, compute_uv=False)
        assert singular.max() / singular.min() == pytest.approx(condition, rel=0.01)

    def test_unit_condition_is_orthogonal(self):
        matrix = generate_rotation(20, 1.0, seed=3).matrix
        assert np.allclose(matrix @ matrix.T, np.eye(20), atol=1e-10)

    def test_condition_below_one_rejected(self):
        with pytest.raises(InvalidParameter):
            generate_rotation(5, 0.5, seed=1)

    def test_shift_is_reproducible_and_interior(self):
        domain = Domain.box(40, -5.0, 5.0)
        a, b = generate_shift(40, domain, 9), generate_shift(40, domain, 9)
        assert np.array_equal(a.o, b.o)
        assert np.all(np.abs(a.o) <= 4.0)


class TestKernels:
    def test_batch_matches_pointwise(self):
        rng = make_rng(4)
        batch = rng.uniform(-3, 3, size=(6, 8))
        for kernel in (fn.sphere, fn.rastrigin, fn.ackley, fn.griewank, fn.schwefel_1_2, fn.michalewicz):
            expected = [kernel(row) for row in batch]
            assert np.allclose(kernel(batch), expected)

    def test_round_half_away_from_zero(self):
        assert np.array_equal(fn.round_half_away(np.array([0.5, -0.5, 2.5, -2.5, 1.4])),
                              np.array([1.0, -1.0, 3.0, -3.0, 1.0]))

    def test_noncontinuous_rastrigin_rounds_outside_half(self):
        z = np.array([-0.74, -0.5, -0.49, 0.0, 0.3, 0.49, 0.5, 0.74, 0.76])
        y = np.array([-0.5, -0.5, -0.49, 0.0, 0.3, 0.49, 0.5, 0.5, 1.0])
        for zi, yi in zip(z, y):
            assert fn.noncontinuous_rastrigin(np.array([zi])) == pytest.approx(fn.rastrigin(np.array([yi])))

    def test_doubledip_vanishes_at_window_edges(self):
        c, s = np.array([0.3]), np.array([2.0])
        assert fn.doubledip(np.array([0.3]), c, s)[0] == pytest.approx(2.0)
        for edge in (-0.2 + 1e-9, 0.8 - 1e-9):
            assert abs(fn.doubledip(np.array([edge]), c, s)[0]) < 1e-5
        assert fn.doubledip(np.array([0.9]), c, s)[0] == 0.0

    def test_twist_roots(self):
        assert np.allclose(fn.twist(np.array([0.0, 1.0])), 0.0)

    def test_fractal_dips_are_seeded(self):
        a, b = fn.fractal_dips(11), fn.fractal_dips(11)
        assert np.array_equal(a[0], b[0]) and np.array_equal(a[1], b[1])
        assert np.all((a[0] >= 0.0) & (a[0] < 1.0))
        assert np.all(a[1] > 0.0)

    @pytest.mark.parametrize("a, k, m", [(10.0, 100.0, 4.0), (5.0, 100.0, 4.0), (1.0, 2.0, 3.0)])
    def test_penalty_is_scaled_power_of_the_excess(self, a, k, m):
        t = np.linspace(0.05, 4.0, 40)
        assert np.allclose(fn.penalty_u(a + t, a, k, m), k * t ** m, rtol=1e-9)
        assert np.allclose(fn.penalty_u(-a - t, a, k, m), k * t ** m, rtol=1e-9)
        assert not fn.penalty_u(np.linspace(-a, a, 41), a, k, m).any()


class TestEvaluation:
    def test_wrong_length_rejected(self, specs):
        with pytest.raises(DimensionMismatch):
            eval_benchmark(specs["f1"], np.zeros(29))

    def test_suite_is_reproducible(self):
        x = np.linspace(-1.0, 1.0, 30)
        first = [p(x) for p in make_suite(3, ["f1", "f5", "f16", "f18"])]
        second = [p(x) for p in make_suite(3, ["f1", "f5", "f16", "f18"])]
        assert first == second

    def test_every_problem_evaluates_finite(self):
        rng = make_rng(8)
        for problem in make_suite(0):
            value = problem(rng.uniform(problem.domain.lower, problem.domain.upper))
            assert np.isfinite(value)

    def test_rotated_ackley_is_ackley_of_rotated_offset(self, specs):
        spec = specs["f5"]
        function = BenchmarkFunction(spec)
        rng = make_rng(12)
        for _ in range(20):
            x = rng.uniform(spec.lower, spec.upper, size=spec.dimension)
            offset = x - function.shift
            rotated = function.rotation @ offset
            assert np.linalg.norm(rotated) == pytest.approx(np.linalg.norm(offset), rel=1e-10)
            assert eval_benchmark(spec, x) == pytest.approx(float(fn.ackley(rotated)), rel=1e-12, abs=1e-12)

    def test_every_problem_is_finite_at_the_corners(self):
        for problem in make_suite(0):
            lower, upper = problem.domain.lower, problem.domain.upper
            alternating = np.where(np.arange(problem.dimension) % 2 == 0, lower, upper)
            for corner in (lower, upper, alternating):
                assert np.isfinite(problem(corner.copy())), problem.label

    def test_manifest_columns(self):
        frame = manifest(make_suite(0, ["f1", "f30"]))
        assert list(frame.columns) == ['id', 'name', 'n', 'lower', 'upper', 'seed', 'modality',
                                       'separability', 'rotated', 'shifted']
        assert frame['id'].tolist() == ['f1', 'f30']
        assert frame.loc[0, 'separability'] == 'separable'
