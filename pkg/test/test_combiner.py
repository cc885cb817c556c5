"""
Combiner domain 테스트
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError
from scipy import stats

from tsvha.core.exceptions import CombinerException, ErrorCode
from tsvha.domains.combiner import (
    CoefficientVector,
    CombinerKind,
    CombinerSpec,
    c1_coefficients,
    c2_coefficients,
    c3_agent_count,
    c3_combine,
    coefficients,
    combine_table,
    linear_combine,
    scaled_gaussian_sample,
    scaled_gaussian_table_sample,
    variance_scale,
)
from tsvha.domains.posterior import (
    GaussianArmState,
    PosteriorFamily,
    init_table,
    sample,
    update_table,
)


class TestLinearCoefficients:
    def test_c1(self):
        coeffs = c1_coefficients(4)
        assert np.allclose(coeffs.coefficients, 0.25)
        assert coeffs.total == pytest.approx(1.0)
        assert coeffs.sum_of_squares == pytest.approx(0.25)

    def test_c2_two_agents(self):
        coeffs = c2_coefficients(2)
        half_root3 = math.sqrt(3.0) / 2.0
        assert np.allclose(coeffs.coefficients, [0.5 + half_root3, 0.5 - half_root3])

    @pytest.mark.parametrize("n_agents", range(2, 51))
    def test_c2_moments(self, n_agents):
        coeffs = c2_coefficients(n_agents)
        assert len(coeffs) == n_agents
        assert abs(coeffs.total - 1.0) < 1e-12
        assert abs(coeffs.sum_of_squares - n_agents) < 1e-9

    @pytest.mark.parametrize("n_agents", range(1, 51))
    def test_c1_moments(self, n_agents):
        assert abs(c1_coefficients(n_agents).sum_of_squares - 1.0 / n_agents) < 1e-12

    def test_c2_rejects_single_agent(self):
        with pytest.raises(CombinerException) as exc_info:
            c2_coefficients(1)
        assert exc_info.value.error_code is ErrorCode.COMBINER_TOO_FEW_AGENTS

    def test_c1_rejects_zero_agents(self):
        with pytest.raises(CombinerException):
            c1_coefficients(0)

    def test_vector_must_sum_to_one(self):
        with pytest.raises(CombinerException):
            CoefficientVector(np.array([0.5, 0.4]))

    def test_linear_combine(self):
        assert linear_combine(c1_coefficients(2), [0.2, 0.4]) == pytest.approx(0.3)

    def test_linear_combine_length_mismatch(self):
        with pytest.raises(CombinerException) as exc_info:
            linear_combine(c1_coefficients(3), [0.1, 0.2])
        assert exc_info.value.error_code is ErrorCode.COMBINER_LENGTH_MISMATCH


class TestCombinerSpec:
    def test_defaults_to_identity(self):
        spec = CombinerSpec()
        assert spec.kind is CombinerKind.IDENTITY
        assert spec.virtual_agents == 0
        assert variance_scale(spec) == 1.0

    @pytest.mark.parametrize(
        "kind, agents, gamma",
        [("c1", 3, 3.0), ("c1", 1, 1.0), ("c2", 2, 0.5), ("c2", 5, 0.2)],
    )
    def test_variance_scale(self, kind, agents, gamma):
        assert variance_scale(CombinerSpec(kind=kind, agents=agents)) == pytest.approx(gamma)

    def test_c3_has_no_coefficients(self):
        with pytest.raises(CombinerException) as exc_info:
            coefficients(CombinerSpec(kind="c3"))
        assert exc_info.value.error_code is ErrorCode.COMBINER_NOT_LINEAR

    @pytest.mark.parametrize(
        "payload",
        [
            {"kind": "identity", "agents": 2},
            {"kind": "c2", "agents": 1},
            {"kind": "c1", "agents": 0},
            {"kind": "c1", "agents": 2, "helpers": 1},
        ],
    )
    def test_invalid_specs(self, payload):
        with pytest.raises(ValidationError):
            CombinerSpec(**payload)


class TestDynamicCombiner:
    def test_agent_count(self):
        means = [0.75, 0.5, 0.0]
        assert c3_agent_count(100, means) == 25
        assert c3_agent_count(1, means) == 1
        assert c3_agent_count(3, [0.5, 0.5]) == 1

    def test_agent_count_cap(self):
        assert c3_agent_count(10**9, [1.0, 0.0]) == 10_000
        assert c3_agent_count(100, [1.0, 0.0], cap=7) == 7

    def test_agent_count_nondecreasing_in_t(self):
        counts = [c3_agent_count(t, [0.8, 0.45, 0.1], cap=500) for t in range(1, 3000, 7)]
        assert all(a <= b for a, b in zip(counts, counts[1:]))
        assert counts[-1] == 500

    def test_agent_count_nondecreasing_in_gap(self):
        counts = [c3_agent_count(250, [0.2 + gap, 0.2, 0.0], cap=100) for gap in np.linspace(0.0, 0.8, 81)]
        assert all(a <= b for a, b in zip(counts, counts[1:]))
        assert counts[0] == 1 and counts[-1] == 100

    def test_agent_count_needs_two_arms(self):
        with pytest.raises(CombinerException) as exc_info:
            c3_agent_count(10, [0.3])
        assert exc_info.value.error_code is ErrorCode.COMBINER_TOO_FEW_ARMS

    def test_combine_average_and_floor(self):
        assert c3_combine([1.0, 2.0], [0.1, 0.2]) == pytest.approx(1.5)
        assert c3_combine([0.2, 0.4], [0.5, 0.35]) == pytest.approx(0.35)

    def test_combine_empty(self):
        with pytest.raises(CombinerException) as exc_info:
            c3_combine([], [0.1])
        assert exc_info.value.error_code is ErrorCode.COMBINER_EMPTY_INPUT

    @pytest.mark.parametrize("family", list(PosteriorFamily))
    def test_table_floor(self, family, rng):
        table = init_table(family, 3)
        for arm, reward in [(0, 1), (0, 1), (1, 0), (2, 1)]:
            table = update_table(table, arm, reward)
        floor = table.empirical_means.min()
        for t in range(1, 50):
            assert np.all(combine_table(CombinerSpec(kind="c3"), table, t, rng) >= floor)


class TestScaledGaussian:
    def test_rejects_non_positive_gamma(self, rng):
        with pytest.raises(CombinerException) as exc_info:
            scaled_gaussian_sample(GaussianArmState(), 0.0, rng)
        assert exc_info.value.error_code is ErrorCode.COMBINER_INVALID_GAMMA
        with pytest.raises(CombinerException):
            scaled_gaussian_table_sample(init_table(PosteriorFamily.GAUSSIAN, 2), -1.0, rng)

    @pytest.mark.parametrize("kind, agents", [("c1", 4), ("c2", 2), ("c2", 3)])
    def test_matches_materialised_combination(self, kind, agents):
        rng = np.random.default_rng(2024)
        state = GaussianArmState(reward_sum=1.5, play_count=2)
        spec = CombinerSpec(kind=kind, agents=agents)
        coeffs = coefficients(spec)

        explicit = np.array([
            linear_combine(coeffs, [sample(state, rng) for _ in range(agents)])
            for _ in range(4000)
        ])
        shortcut = np.array([
            scaled_gaussian_sample(state, variance_scale(spec), rng) for _ in range(4000)
        ])
        assert stats.ks_2samp(explicit, shortcut).pvalue > 1e-3

    def test_variance_inflation(self, rng):
        state = GaussianArmState(reward_sum=2.0, play_count=3)
        draws = np.array([scaled_gaussian_sample(state, 0.5, rng) for _ in range(20000)])
        assert draws.mean() == pytest.approx(0.5, abs=0.03)
        assert draws.var() == pytest.approx(2.0 / 4.0, rel=0.05)


class TestCombineTable:
    def test_identity_equals_one_draw(self):
        table = update_table(init_table(PosteriorFamily.GAUSSIAN, 3), 0, 1.0)
        combined = combine_table(CombinerSpec(), table, 1, np.random.default_rng(5))
        direct = scaled_gaussian_table_sample(table, 1.0, np.random.default_rng(5))
        assert np.array_equal(combined, direct)

    def test_beta_linear_combination(self):
        table = init_table(PosteriorFamily.BETA, 4)
        combined = combine_table(CombinerSpec(kind="c1", agents=3), table, 1, np.random.default_rng(8))
        assert combined.shape == (4,)
        assert np.all((combined >= 0.0) & (combined <= 1.0))

    def test_beta_c1_concentrates(self, rng):
        table = init_table(PosteriorFamily.BETA, 1)
        single = [combine_table(CombinerSpec(), table, 1, rng)[0] for _ in range(4000)]
        averaged = [combine_table(CombinerSpec(kind="c1", agents=4), table, 1, rng)[0] for _ in range(4000)]
        assert np.var(averaged) == pytest.approx(np.var(single) / 4.0, rel=0.1)

    def test_reproducible(self):
        table = init_table(PosteriorFamily.GAUSSIAN, 5)
        spec = CombinerSpec(kind="c2", agents=2)
        first = combine_table(spec, table, 1, np.random.default_rng(11))
        second = combine_table(spec, table, 1, np.random.default_rng(11))
        assert np.array_equal(first, second)
