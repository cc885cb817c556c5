"""
Combiner Services

Linear combiners C1 (averaging, variance / N) and C2 (variance x N), the
dynamic combiner C3, and the variance-scaled single draw that is equivalent
to a linear combiner on Gaussian posteriors.
"""

import math
from typing import Optional, Sequence

import numpy as np

from tsvha.core.config import settings
from tsvha.core.exceptions import CombinerException, ErrorCode
from tsvha.domains.combiner.schemas.combiner_schemas import CoefficientVector, CombinerKind, CombinerSpec
from tsvha.domains.posterior import GaussianArmState, PosteriorFamily, PosteriorTable, sample_table


def c1_coefficients(n_agents: int) -> CoefficientVector:
    """c_n = 1/N for all n"""
    if n_agents < 1:
        raise CombinerException(detail=f"N must be >= 1, got {n_agents}", agents=n_agents)
    return CoefficientVector(np.full(n_agents, 1.0 / n_agents))


def c2_coefficients(n_agents: int) -> CoefficientVector:
    """
    Variance-inflating weights with sum(c) = 1 and sum(c^2) = N.

    c_n = 1/N + s * (-1)^(n+1). For even N, s = sqrt(N^2 - 1) / N over all
    N weights; for odd N, s = sqrt((N + 1) / N) over the first N - 1 weights
    and c_N = 1/N. The alternating signs cancel pairwise, so the mean is kept.
    """
    if n_agents < 2:
        raise CombinerException(
            detail=f"C2 needs at least two agents, got {n_agents}",
            agents=n_agents,
            error_code=ErrorCode.COMBINER_TOO_FEW_AGENTS,
        )
    base = 1.0 / n_agents
    if n_agents % 2 == 0:
        spread = math.sqrt(n_agents * n_agents - 1.0) / n_agents
        perturbed = n_agents
    else:
        spread = math.sqrt((n_agents + 1.0) / n_agents)
        perturbed = n_agents - 1

    signs = np.where(np.arange(perturbed) % 2 == 0, 1.0, -1.0)
    coefficients = np.full(n_agents, base)
    coefficients[:perturbed] += spread * signs
    return CoefficientVector(coefficients)


def coefficients(spec: CombinerSpec) -> CoefficientVector:
    """Fixed coefficient vector of a linear combiner"""
    if spec.kind is CombinerKind.IDENTITY:
        return CoefficientVector(np.ones(1))
    if spec.kind is CombinerKind.C1:
        return c1_coefficients(spec.agents)
    if spec.kind is CombinerKind.C2:
        return c2_coefficients(spec.agents)
    raise CombinerException(
        detail="C3 recomputes its agent count every period",
        error_code=ErrorCode.COMBINER_NOT_LINEAR,
    )


def variance_scale(spec: CombinerSpec) -> float:
    """gamma such that the combined statistic has variance 1 / (gamma (k+1))"""
    return 1.0 / coefficients(spec).sum_of_squares


def linear_combine(coeffs: CoefficientVector, samples: Sequence[float]) -> float:
    """sum_n c_n * samples_n"""
    values = np.asarray(samples, dtype=float)
    if values.shape != (coeffs.n_agents,):
        raise CombinerException(
            detail=f"expected {coeffs.n_agents} samples, got {values.size}",
            agents=coeffs.n_agents,
            error_code=ErrorCode.COMBINER_LENGTH_MISMATCH,
        )
    return float(values @ coeffs.coefficients)


def c3_agent_count(t: int, empirical_means: Sequence[float], cap: Optional[int] = None) -> int:
    """N(t) = min(cap, floor(max(1, t * gap))) with gap = best minus second-best mean"""
    cap = settings.numeric.C3_AGENT_CAP if cap is None else cap
    means = np.asarray(empirical_means, dtype=float)
    if means.size < 2:
        raise CombinerException(
            detail=f"C3 needs at least two arms, got {means.size}",
            error_code=ErrorCode.COMBINER_TOO_FEW_ARMS,
        )
    top_two = np.partition(means, means.size - 2)[-2:]
    gap = float(top_two[1] - top_two[0])
    return int(min(cap, math.floor(max(1.0, t * gap))))


def c3_combine(samples: Sequence[float], empirical_means: Sequence[float]) -> float:
    """max(average of samples, smallest empirical mean over all arms)"""
    values = np.asarray(samples, dtype=float)
    means = np.asarray(empirical_means, dtype=float)
    if values.size == 0 or means.size == 0:
        raise CombinerException(
            detail="samples and empirical means must be non-empty",
            error_code=ErrorCode.COMBINER_EMPTY_INPUT,
        )
    return float(max(values.mean(), means.min()))


def scaled_gaussian_sample(state: GaussianArmState, gamma: float, rng: np.random.Generator) -> float:
    """Draw from N(mu_hat, 1 / (gamma (k+1)))"""
    if not gamma > 0:
        raise CombinerException(
            detail=f"gamma must be positive, got {gamma!r}",
            error_code=ErrorCode.COMBINER_INVALID_GAMMA,
        )
    scale = math.sqrt(1.0 / (gamma * (state.play_count + 1)))
    return float(rng.normal(state.empirical_mean, scale))


def scaled_gaussian_table_sample(table: PosteriorTable, gamma: float, rng: np.random.Generator) -> np.ndarray:
    """One variance-scaled draw per arm, ascending arm order"""
    if not gamma > 0:
        raise CombinerException(
            detail=f"gamma must be positive, got {gamma!r}",
            error_code=ErrorCode.COMBINER_INVALID_GAMMA,
        )
    scale = np.sqrt(1.0 / (gamma * (table.play_counts + 1.0)))
    return rng.normal(table.empirical_means, scale)


def combine_table(spec: CombinerSpec, table: PosteriorTable, t: int, rng: np.random.Generator) -> np.ndarray:
    """
    Combined statistic theta_i(t) for every arm.

    On Gaussian posteriors a linear combination of N i.i.d. draws is itself
    Gaussian, so it is drawn once with gamma = 1 / sum(c^2). Beta posteriors
    materialise the N draws per arm. C3 recomputes N(t) every period.
    """
    gaussian = table.family is PosteriorFamily.GAUSSIAN
    if spec.kind is not CombinerKind.C3:
        coeffs = coefficients(spec)
        if gaussian:
            return scaled_gaussian_table_sample(table, 1.0 / coeffs.sum_of_squares, rng)
        draws = sample_table(table, rng, agents=coeffs.n_agents)
        return draws @ coeffs.coefficients

    means = table.empirical_means
    agents = c3_agent_count(t, means, spec.c3_agent_cap) if table.n_arms >= 2 else 1
    if gaussian:
        averaged = scaled_gaussian_table_sample(table, float(agents), rng)
    else:
        averaged = sample_table(table, rng, agents=agents).mean(axis=1)
    return np.maximum(averaged, means.min())
