"""
Posterior Services
켤레(conjugate) 사후분포 갱신 및 샘플링
"""

import math

import numpy as np

from tsvha.core.exceptions import ErrorCode, PosteriorException
from tsvha.domains.posterior.schemas.posterior_schemas import (
    ArmPosterior,
    BetaArmState,
    GaussianArmState,
    PosteriorFamily,
    PosteriorTable,
)


def _check_beta_reward(reward: float) -> None:
    if reward != 0 and reward != 1:
        raise PosteriorException(
            detail=f"Beta posterior accepts rewards in {{0, 1}}, got {reward!r}",
            family=PosteriorFamily.BETA.value,
        )


def init_posterior(family: PosteriorFamily) -> ArmPosterior:
    """Prior state: N(0, 1) or Beta(1, 1)"""
    if PosteriorFamily(family) is PosteriorFamily.GAUSSIAN:
        return GaussianArmState()
    return BetaArmState()


def update(post: ArmPosterior, reward: float) -> ArmPosterior:
    """
    Bayes update of one arm with one observed reward.

    Gaussian: k' = k + 1, reward_sum' = reward_sum + reward.
    Beta: (alpha + r, beta + 1 - r), r in {0, 1}.
    """
    if isinstance(post, GaussianArmState):
        return GaussianArmState(
            reward_sum=post.reward_sum + float(reward),
            play_count=post.play_count + 1,
        )
    _check_beta_reward(reward)
    return BetaArmState(alpha=post.alpha + reward, beta=post.beta + 1 - reward)


def sample(post: ArmPosterior, rng: np.random.Generator) -> float:
    """One posterior draw"""
    if isinstance(post, GaussianArmState):
        return float(rng.normal(post.empirical_mean, math.sqrt(post.variance)))
    return float(rng.beta(post.alpha, post.beta))


def empirical_mean(post: ArmPosterior) -> float:
    return post.empirical_mean


def posterior_mean(post: ArmPosterior) -> float:
    if isinstance(post, GaussianArmState):
        return post.empirical_mean
    return post.alpha / (post.alpha + post.beta)


def posterior_variance(post: ArmPosterior) -> float:
    return post.variance


# ============ Vectorised table operations ============

def init_table(family: PosteriorFamily, n_arms: int) -> PosteriorTable:
    """Prior state for K arms"""
    if n_arms < 1:
        raise PosteriorException(
            detail=f"at least one arm required, got {n_arms}",
            error_code=ErrorCode.POSTERIOR_FAMILY_MISMATCH,
        )
    return PosteriorTable(
        family=PosteriorFamily(family),
        reward_sums=np.zeros(n_arms),
        play_counts=np.zeros(n_arms),
    )


def update_table(table: PosteriorTable, arm: int, reward: float) -> PosteriorTable:
    """Update only the played arm; other arms are copied unchanged"""
    if table.family is PosteriorFamily.BETA:
        _check_beta_reward(reward)
    reward_sums = table.reward_sums.copy()
    play_counts = table.play_counts.copy()
    reward_sums[arm] += float(reward)
    play_counts[arm] += 1.0
    return PosteriorTable(family=table.family, reward_sums=reward_sums, play_counts=play_counts)


def sample_table(table: PosteriorTable, rng: np.random.Generator, agents: int = 1) -> np.ndarray:
    """
    Independent posterior draws for every arm and agent.

    Returns shape (K, agents); the stream is consumed arm by arm,
    agents in ascending order within each arm.
    """
    size = (table.n_arms, agents)
    if table.family is PosteriorFamily.GAUSSIAN:
        loc = table.empirical_means[:, None]
        scale = np.sqrt(1.0 / (table.play_counts + 1.0))[:, None]
        return rng.normal(np.broadcast_to(loc, size), np.broadcast_to(scale, size))
    return rng.beta(
        np.broadcast_to(table.alphas[:, None], size),
        np.broadcast_to(table.betas[:, None], size),
    )
