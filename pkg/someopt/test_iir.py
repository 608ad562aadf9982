#!/usr/bin/env python3
"""Tests for the IIR filter identification problem and the Jury stability test."""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from core import WORST, DegeneratePolynomial, DimensionMismatch, InvalidParameter
from core.coordinator import SomeConfig, run_batch
from iir import (
    PLANT_DENOMINATOR,
    FilterCoeffs,
    characteristic_polynomial,
    filter_response,
    generate_input,
    is_stable,
    jury_stable,
    mae_objective,
    make_iir_problem,
    make_signals,
    pole_moduli,
    simulate_plant,
)


@pytest.fixture(scope="module")
def signals():
    return make_signals(noise_seed=0)


def random_denominators(count, order, seed):
    """Feedback vectors b built from random conjugate pole pairs of modulus up to 1.3."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        radius = rng.uniform(0.0, 1.3, order // 2)
        angle = rng.uniform(0.0, np.pi, order // 2)
        poles = radius * np.exp(1j * angle)
        coeffs = np.real(np.poly(np.concatenate([poles, poles.conj()])))
        yield -coeffs[1:]


class TestJury:
    def test_agrees_with_root_oracle(self):
        checked = 0
        for b in random_denominators(10_000, 10, seed=1):
            largest = np.max(np.abs(np.roots(characteristic_polynomial(b))))
            if abs(largest - 1.0) < 1e-6:
                continue
            assert is_stable(b) == (largest < 1.0)
            checked += 1
        assert checked > 9_000

    def test_uniform_feedback_vectors(self):
        rng = np.random.default_rng(2)
        for _ in range(2_000):
            b = rng.uniform(-0.3, 0.3, 10)
            largest = np.max(np.abs(np.roots(characteristic_polynomial(b))))
            if abs(largest - 1.0) > 1e-6:
                assert is_stable(b) == (largest < 1.0)

    def test_simple_cases(self):
        assert jury_stable([1.0, -0.5])
        assert not jury_stable([1.0, -1.5])
        assert not jury_stable([1.0, 0.0, -1.0])
        assert jury_stable([2.0, 0.0, 0.5])

    def test_plant_is_stable(self):
        assert jury_stable(PLANT_DENOMINATOR)
        assert np.all(pole_moduli(FilterCoeffs.plant().b) < 1.0)

    def test_zero_leading_coefficient_rejected(self):
        with pytest.raises(DegeneratePolynomial):
            jury_stable([0.0, 1.0])


class TestSignals:
    def test_input_shape_and_reproducibility(self):
        u = generate_input(noise_seed=4)
        assert u.shape == (1000,)
        assert np.array_equal(u, generate_input(noise_seed=4))
        assert not np.array_equal(u, generate_input(noise_seed=5))

    def test_noise_free_input(self):
        u = generate_input(N=3, noise_amplitude=0.0)
        t = np.arange(1, 4) * 0.001
        expected = 1 + 5 * np.sin(0.5 * np.pi * t) + 0.25 * np.sin(4 * np.pi * t + np.pi / 3)
        assert np.allclose(u, expected)

    def test_invalid_arguments(self):
        with pytest.raises(InvalidParameter):
            generate_input(N=0)
        with pytest.raises(InvalidParameter):
            generate_input(T=0.0)

    def test_pack_unpack(self):
        x = np.arange(21, dtype=float)
        coeffs = FilterCoeffs.unpack(x)
        assert coeffs.a.shape == (11,) and coeffs.b.shape == (10,)
        assert np.array_equal(coeffs.pack(), x)
        with pytest.raises(DimensionMismatch):
            FilterCoeffs.unpack(np.zeros(20))

    def test_filter_recursion(self):
        # y(k) = 0.5 y(k-1) + u(k) on a unit impulse
        coeffs = FilterCoeffs(np.r_[1.0, np.zeros(10)], np.r_[0.5, np.zeros(9)])
        y = filter_response(coeffs, np.r_[1.0, np.zeros(4)])
        assert np.allclose(y, [1.0, 0.5, 0.25, 0.125, 0.0625])


class TestLinearity:
    @pytest.fixture(params=["plant", "filter"])
    def system(self, request):
        if request.param == "plant":
            return simulate_plant
        rng = np.random.default_rng(6)
        coeffs = FilterCoeffs(rng.uniform(-1.0, 1.0, 11), rng.uniform(-0.05, 0.05, 10))
        assert is_stable(coeffs.b)
        return lambda u: filter_response(coeffs, u)

    def test_superposition(self, system):
        rng = np.random.default_rng(7)
        u1, u2 = rng.normal(size=300), rng.normal(size=300)
        combined = system(2.5 * u1 - 0.75 * u2)
        assert np.allclose(combined, 2.5 * system(u1) - 0.75 * system(u2), atol=1e-9)

    def test_time_shift(self, system):
        u = np.random.default_rng(8).normal(size=300)
        shift = 17
        delayed = system(np.r_[np.zeros(shift), u[:-shift]])
        assert np.all(delayed[:shift] == 0.0)
        assert np.allclose(delayed[shift:], system(u)[:-shift], atol=1e-9)

    def test_plant_impulse_starts_one_step_late(self):
        d = simulate_plant(np.r_[1.0, np.zeros(9)])
        assert d[0] == 0.0
        assert d[1] == 1.0


class TestObjective:
    def test_plant_coefficients_reproduce_the_plant(self, signals):
        assert mae_objective(FilterCoeffs.plant(), signals) <= 1e-9
        assert np.allclose(simulate_plant(signals.u), signals.d)

    def test_unstable_filter_is_worst(self, signals):
        unstable = FilterCoeffs(np.zeros(11), np.r_[1.5, np.zeros(9)])
        assert mae_objective(unstable, signals) == WORST

    def test_problem_shape(self):
        problem = make_iir_problem(noise_seed=0)
        assert problem.dimension == 21
        assert np.all(problem.domain.lower == 0.0) and np.all(problem.domain.upper == 1.0)
        assert problem.label == "iir"
        zero = problem(np.zeros(21))
        assert zero == pytest.approx(np.mean(np.abs(problem.evaluator.signals.d)))

    def test_signals_are_frozen_across_evaluations(self):
        problem = make_iir_problem(noise_seed=3)
        x = np.full(21, 0.05)
        assert problem(x) == problem(x)


@pytest.mark.slow
def test_three_some_identifies_the_filter():
    problem = make_iir_problem(noise_seed=0)
    results = run_batch(problem, SomeConfig(), 10_000, 30, master_seed=0)
    finals = [r.best.fitness for r in results]
    assert np.mean(finals) <= 0.1
    assert np.min(finals) <= 0.05
