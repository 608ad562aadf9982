#!/usr/bin/env python3
"""Tests for value types, seeding and budget accounting."""

import json
import logging
import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from core import (
    WORST,
    BudgetExhausted,
    BudgetTracker,
    Candidate,
    DimensionMismatch,
    Domain,
    InvalidParameter,
    Problem,
    derive_seed,
    evaluate,
    make_rng,
    toroidal_correct,
    uniform_sample,
)
from core.types import sanitize_fitness
from utils import get_logger, instrument, log_kv, set_level


def sphere_problem(n=3, low=-5.0, high=5.0, evaluator=None):
    return Problem(
        dimension=n,
        domain=Domain.box(n, low, high),
        evaluator=evaluator or (lambda x: float(np.sum(x ** 2))),
        label="sphere"
    )


class TestDomain:
    def test_rejects_empty_interval(self):
        with pytest.raises(InvalidParameter):
            Domain(np.array([0.0, 1.0]), np.array([1.0, 1.0]))

    def test_box_width(self):
        domain = Domain.box(4, -2.0, 3.0)
        assert domain.dimension == 4
        assert np.allclose(domain.width, 5.0)

    def test_problem_dimension_must_match_domain(self):
        with pytest.raises(DimensionMismatch):
            Problem(3, Domain.box(2, 0.0, 1.0), lambda x: 0.0, "bad")


class TestToroidalCorrection:
    def test_wraps_past_upper_bound(self):
        domain = Domain.box(1, 0.0, 1.0)
        assert toroidal_correct(np.array([1.3]), domain)[0] == pytest.approx(0.3)

    def test_wraps_past_lower_bound(self):
        domain = Domain.box(1, -10.0, 10.0)
        assert toroidal_correct(np.array([-12.0]), domain)[0] == pytest.approx(8.0)

    def test_in_bounds_untouched(self):
        domain = Domain.box(3, -1.0, 1.0)
        x = np.array([-1.0, 0.25, 1.0])
        assert np.array_equal(toroidal_correct(x, domain), x)

    def test_result_always_inside(self):
        domain = Domain(np.array([-3.0, 0.0, 10.0]), np.array([2.0, 0.5, 11.0]))
        rng = make_rng(7)
        for _ in range(200):
            x = rng.uniform(-50, 50, size=3)
            assert domain.contains(toroidal_correct(x, domain))

    def test_matches_modular_formula(self):
        rng = make_rng(17)
        for _ in range(10_000):
            low = rng.uniform(-100.0, 100.0)
            width = rng.uniform(0.1, 50.0)
            high = low + width
            domain = Domain.box(1, low, high)
            x = rng.uniform(low - 3 * width, high + 3 * width)
            expected = x if low <= x <= high else low + (x - low) % (high - low)
            corrected = toroidal_correct(np.array([x]), domain)
            assert corrected[0] == pytest.approx(expected, rel=1e-12, abs=1e-12)
            assert np.array_equal(toroidal_correct(corrected, domain), corrected)


class TestSeeding:
    def test_derive_seed_is_stable_and_distinct(self):
        seed = derive_seed(0, "f1", "3SOME", 0)
        assert seed == derive_seed(0, "f1", "3SOME", 0)
        assert 0 <= seed < 2 ** 64
        others = {
            derive_seed(1, "f1", "3SOME", 0),
            derive_seed(0, "f2", "3SOME", 0),
            derive_seed(0, "f1", "1SOME", 0),
            derive_seed(0, "f1", "3SOME", 1),
        }
        assert seed not in others
        assert len(others) == 4

    def test_make_rng_reproducible(self):
        assert np.array_equal(make_rng(42).random(5), make_rng(42).random(5))

    def test_uniform_sample_inside_domain(self):
        domain = Domain(np.array([-1.0, 5.0]), np.array([1.0, 6.0]))
        rng = make_rng(3)
        assert all(domain.contains(uniform_sample(domain, rng)) for _ in range(100))

    def test_uniform_sample_mean_is_centred(self):
        domain = Domain(np.array([-1.0, 5.0, -100.0]), np.array([1.0, 6.0, 300.0]))
        rng = make_rng(5)
        count = 100_000
        samples = np.array([uniform_sample(domain, rng) for _ in range(count)])
        standard_error = domain.width / np.sqrt(12.0 * count)
        centre = (domain.lower + domain.upper) / 2.0
        assert np.all(np.abs(samples.mean(axis=0) - centre) < 3.0 * standard_error)


class TestBudget:
    def test_counts_every_evaluation(self):
        calls = []
        problem = sphere_problem(evaluator=lambda x: calls.append(1) or float(np.sum(x ** 2)))
        tracker = BudgetTracker(5)
        for _ in range(5):
            evaluate(problem, np.zeros(3), tracker)
        assert tracker.consumed == len(calls) == 5
        assert tracker.exhausted

    def test_evaluate_past_limit_raises(self):
        problem = sphere_problem()
        tracker = BudgetTracker(1)
        evaluate(problem, np.ones(3), tracker)
        with pytest.raises(BudgetExhausted):
            evaluate(problem, np.ones(3), tracker)
        assert tracker.consumed == 1

    def test_wrong_length_rejected_without_charge(self):
        tracker = BudgetTracker(10)
        with pytest.raises(DimensionMismatch):
            evaluate(sphere_problem(), np.ones(4), tracker)
        assert tracker.consumed == 0

    def test_non_finite_fitness_becomes_worst(self):
        problem = sphere_problem(evaluator=lambda x: float("nan"))
        tracker = BudgetTracker(3)
        assert evaluate(problem, np.ones(3), tracker) == WORST
        assert sanitize_fitness(float("-inf")) == WORST

    def test_non_positive_limit_rejected(self):
        with pytest.raises(InvalidParameter):
            BudgetTracker(0)

    def test_trajectory_is_non_increasing_and_ends_at_budget(self):
        problem = sphere_problem()
        tracker = BudgetTracker(1000)
        rng = make_rng(11)
        while not tracker.exhausted:
            evaluate(problem, uniform_sample(problem.domain, rng), tracker)
        trajectory = tracker.close()
        fitness = [f for _, f in trajectory]
        evals = [e for e, _ in trajectory]
        assert all(b <= a for a, b in zip(fitness, fitness[1:]))
        assert evals == sorted(set(evals))
        assert evals[-1] == 1000
        assert fitness[-1] == tracker.best_fitness

    def test_on_evaluation_hook(self):
        seen = []
        tracker = BudgetTracker(3, on_evaluation=lambda used, f: seen.append((used, f)))
        for value in (3.0, 1.0, 2.0):
            tracker.charge(value)
        assert seen == [(1, 3.0), (2, 1.0), (3, 2.0)]
        assert tracker.best_fitness == 1.0


def test_candidate_copy_is_independent():
    original = Candidate(np.zeros(2), 1.0)
    clone = original.copy()
    clone.genes[0] = 5.0
    assert original.genes[0] == 0.0
    assert clone.fitness == 1.0
    assert Candidate(np.zeros(2)).fitness == WORST


class TestLogging:
    @pytest.fixture(autouse=True)
    def info_level(self):
        set_level("INFO")

    def test_events_are_json_lines_with_flat_fields(self, capsys):
        logger = get_logger("test.events")
        log_kv(logger, "batch.complete", runs=np.int64(3), best=np.float64(0.5), name="f1")
        record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert record['event'] == "batch.complete"
        assert (record['runs'], record['best']) == (3, 0.5)
        assert record['kv_name'] == "f1"
        assert record['logger'] == "test.events"

    def test_debug_events_hidden_at_info(self, capsys):
        logger = get_logger("test.quiet")
        log_kv(logger, "run.complete", level=logging.DEBUG, seed=1)
        assert capsys.readouterr().err == ""

    def test_instrument_logs_and_reraises(self, capsys):
        @instrument("stage", get_logger("test.stage"))
        def failing():
            raise InvalidParameter("bad")

        with pytest.raises(InvalidParameter):
            failing()
        record = json.loads(capsys.readouterr().err.strip().splitlines()[-1])
        assert (record['event'], record['error_type']) == ("stage.error", "InvalidParameter")
