"""
Harness domain 테스트
"""

import numpy as np
import pytest
from pydantic import ValidationError

from tsvha.core.exceptions import ErrorCode, HarnessException
from tsvha.domains.envs import BanditInstance, EnvConfig, NoiseKind
from tsvha.domains.harness import (
    ExperimentSpec,
    InstanceMode,
    aggregate,
    aggregate_trace,
    bai_error_rates,
    bai_experiment,
    bai_sweep,
    derive_run_rng,
    play,
    resolve_workers,
    run_bai_single,
    run_experiment,
    run_single,
)
from tsvha.domains.policy import PolicySpec


def _spec(env=None, policies=None, **overrides) -> ExperimentSpec:
    if policies is None:
        policies = [PolicySpec(kind="ts"), PolicySpec(kind="tsvha", combiner={"kind": "c1", "agents": 3})]
    values = dict(
        env=env or EnvConfig(family="random_uniform", arms=3),
        policies=policies,
        horizon=40,
        runs=5,
        base_seed=11,
    )
    values.update(overrides)
    return ExperimentSpec(**values)


def _noiseless(means):
    return EnvConfig(family="fixed", means=means, noise="none")


class TestRandomStreams:
    def test_deterministic(self):
        assert np.array_equal(derive_run_rng(7, 3).random(5), derive_run_rng(7, 3).random(5))

    def test_runs_differ(self):
        assert not np.array_equal(derive_run_rng(7, 0).random(5), derive_run_rng(7, 1).random(5))

    def test_seed_sensitivity(self):
        assert not np.array_equal(derive_run_rng(7, 0).random(5), derive_run_rng(8, 0).random(5))

    def test_runs_uncorrelated(self):
        first = derive_run_rng(42, 0).standard_normal(100_000)
        second = derive_run_rng(42, 1).standard_normal(100_000)
        assert abs(np.corrcoef(first, second)[0, 1]) < 0.02


class TestAggregate:
    def test_small_sample(self):
        summary = aggregate([1.0, 2.0, 3.0])
        assert summary.mean == 2.0
        assert summary.std == pytest.approx(1.0)
        assert summary.quantiles[2] == 2.0
        assert summary.runs == 3

    def test_constant(self):
        summary = aggregate([5.0] * 10)
        assert summary.std == 0.0
        assert summary.quantiles == (5.0,) * 5

    def test_single_value(self):
        summary = aggregate([4.2])
        assert (summary.mean, summary.std, summary.runs) == (4.2, 0.0, 1)

    def test_nearest_rank_quantiles(self):
        summary = aggregate(np.arange(1.0, 11.0))
        assert summary.quantiles == (1.0, 3.0, 5.0, 8.0, 9.0)

    def test_uniform_median(self, rng):
        summary = aggregate(rng.uniform(size=10_000))
        assert summary.quantiles[2] == pytest.approx(0.5, abs=0.02)

    def test_row(self):
        assert aggregate([1.0, 3.0]).row()[-1] == 2

    def test_empty(self):
        with pytest.raises(HarnessException) as exc_info:
            aggregate([])
        assert exc_info.value.error_code is ErrorCode.HARNESS_EMPTY_INPUT
        with pytest.raises(HarnessException):
            aggregate_trace(np.empty((0, 3)))

    def test_trace(self):
        trace = aggregate_trace(np.array([[0.0, 1.0], [2.0, 3.0]]))
        assert np.array_equal(trace.mean, [1.0, 2.0])
        assert trace.horizon == 2
        rows = list(trace.rows())
        assert rows[0][0] == 1
        assert rows[1][-1] == 2


class TestExperimentSpec:
    def test_labels(self):
        assert _spec().labels == ["TS", "TS-VHA-C1-VA2"]

    def test_problems_reported_together(self):
        with pytest.raises(ValidationError) as exc_info:
            _spec(
                env=EnvConfig(family="random_uniform", arms=3),
                policies=[
                    PolicySpec(kind="ts"),
                    PolicySpec(kind="ts", posterior_family="beta"),
                ],
            )
        message = str(exc_info.value)
        assert "duplicate policy labels" in message
        assert "beta posterior needs bernoulli rewards" in message

    def test_beta_with_bernoulli(self):
        spec = _spec(
            env=EnvConfig(family="random_uniform", arms=3, noise="bernoulli"),
            policies=[PolicySpec(kind="ts", posterior_family="beta")],
        )
        assert spec.policies[0].posterior_family.value == "beta"

    @pytest.mark.parametrize("overrides", [{"horizon": 0}, {"runs": 0}, {"base_seed": -1}, {"policies": []}])
    def test_invalid(self, overrides):
        with pytest.raises(ValidationError):
            _spec(**overrides)


class TestPlay:
    def test_regret_and_state(self, rng):
        instance = BanditInstance(means=[0.9, 0.6], noise=NoiseKind.BERNOULLI)
        regrets, state = play(instance, PolicySpec(kind="ts"), 25, rng)
        assert regrets.shape == (25,)
        assert set(np.round(regrets, 12)) <= {0.0, 0.3}
        assert state.t == 26
        assert state.table.play_counts.sum() == 25

    def test_deterministic_regret_bounded(self):
        spec = _spec(env=_noiseless([1.0, 0.0]), horizon=10)
        for result in run_experiment(spec, workers=1).values():
            assert np.all(result.cumulative.mean <= np.arange(1, 11))
            assert np.all(np.diff(result.cumulative.mean) >= 0.0)

    def test_greedy_keeps_first_good_arm(self):
        spec = _spec(env=_noiseless([1.0, 0.0]), policies=[PolicySpec(kind="greedy")], horizon=30)
        result = run_experiment(spec, workers=1)["Greedy"]
        assert np.all(result.final_regrets == 0.0)

    def test_greedy_locks_on_bad_arm(self):
        spec = _spec(env=_noiseless([0.0, 1.0]), policies=[PolicySpec(kind="greedy")], horizon=30)
        result = run_experiment(spec, workers=1)["Greedy"]
        assert np.array_equal(result.cumulative.mean, np.arange(1.0, 31.0))

    def test_run_single_shape(self):
        assert run_single(_spec(), 0).shape == (2, 40)


class TestRunExperiment:
    def test_bit_identical_reruns(self):
        first = run_experiment(_spec(), workers=1)
        second = run_experiment(_spec(), workers=1)
        for label in first:
            assert np.array_equal(first[label].final_regrets, second[label].final_regrets)
            assert np.array_equal(first[label].cumulative.quantiles, second[label].cumulative.quantiles)

    def test_worker_count_invariance(self):
        serial = run_experiment(_spec(runs=6), workers=1)
        parallel = run_experiment(_spec(runs=6), workers=2)
        for label in serial:
            assert np.array_equal(serial[label].final_regrets, parallel[label].final_regrets)
            assert np.array_equal(serial[label].per_period.mean, parallel[label].per_period.mean)

    def test_seed_changes_result(self):
        first = run_experiment(_spec(), workers=1)["TS"]
        second = run_experiment(_spec(base_seed=12), workers=1)["TS"]
        assert not np.array_equal(first.final_regrets, second.final_regrets)

    def test_cumulative_growth_bounds(self):
        result = run_experiment(_spec(), workers=1)["TS"]
        mean = result.cumulative.mean
        assert np.all(np.diff(mean) >= 0.0)
        assert np.all(mean <= np.arange(1, 41))

    def test_quantiles_ordered(self):
        result = run_experiment(_spec(), workers=1)["TS-VHA-C1-VA2"]
        assert np.all(np.diff(result.cumulative.quantiles, axis=0) >= 0.0)
        assert list(result.final.quantiles) == sorted(result.final.quantiles)

    def test_fixed_instance_shared_across_runs(self):
        greedy = [PolicySpec(kind="greedy")]
        env = EnvConfig(family="random_uniform", arms=3, noise="none")
        fixed = run_experiment(
            _spec(env=env, policies=greedy, runs=20, instance_mode=InstanceMode.FIXED_ACROSS_RUNS), workers=1
        )["Greedy"]
        resampled = run_experiment(_spec(env=env, policies=greedy, runs=20), workers=1)["Greedy"]
        assert np.all(fixed.final_regrets == fixed.final_regrets[0])
        assert np.allclose(fixed.cumulative.std, 0.0, atol=1e-12)
        assert resampled.cumulative.std[-1] > 0.0

    def test_tabular_env(self, data_dir):
        env = EnvConfig(family="tabular", table_path=data_dir / "arm_means_sample.csv", noise="bernoulli")
        spec = _spec(env=env, policies=[PolicySpec(kind="ts", posterior_family="beta")], runs=3)
        result = run_experiment(spec, workers=1)["TS"]
        assert result.cumulative.horizon == 40
        assert result.final.runs == 3

    def test_resolve_workers(self):
        assert resolve_workers(3) == 3
        assert resolve_workers(None) >= 1
        with pytest.raises(HarnessException):
            resolve_workers(-1)


class TestBestArmIdentification:
    def test_single_arm_never_errs(self):
        spec = _spec(env=EnvConfig(family="fixed", means=[0.5]))
        assert bai_experiment(spec, 10, workers=1) == 0.0

    def test_noiseless_greedy(self):
        greedy = [PolicySpec(kind="greedy")]
        assert bai_experiment(_spec(env=_noiseless([1.0, 0.0]), policies=greedy), 10, workers=1) == 0.0
        assert bai_experiment(_spec(env=_noiseless([0.0, 1.0]), policies=greedy), 10, workers=1) == 1.0

    def test_miss_flags(self):
        flags = run_bai_single(_spec(env=_noiseless([0.0, 1.0]), policies=[PolicySpec(kind="greedy")]), 5, 0)
        assert np.array_equal(flags, [1.0])

    def test_rejects_zero_budget(self):
        with pytest.raises(HarnessException):
            bai_error_rates(_spec(), 0, workers=1)

    def test_rates_in_unit_interval(self):
        rates = bai_error_rates(_spec(env=EnvConfig(family="fixed", means=[0.5, 0.25])), 20, workers=1)
        assert list(rates) == ["TS", "TS-VHA-C1-VA2"]
        assert all(0.0 <= rate <= 1.0 for rate in rates.values())

    def test_sweep_rows(self):
        rows = bai_sweep(_spec(env=EnvConfig(family="fixed", means=[0.5, 0.25])), [5, 10], workers=1)
        assert [(row.budget, row.policy) for row in rows] == [
            (5, "TS"), (5, "TS-VHA-C1-VA2"), (10, "TS"), (10, "TS-VHA-C1-VA2"),
        ]
        assert all(row.runs == 5 for row in rows)
