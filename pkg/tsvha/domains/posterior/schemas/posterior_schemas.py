"""
Posterior Schemas
팔(arm)별 사후분포 상태 타입
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import ClassVar, Union

import numpy as np

from tsvha.core.exceptions import ErrorCode, PosteriorException


class PosteriorFamily(str, Enum):
    """Conjugate family of the per-arm posterior"""
    GAUSSIAN = "gaussian"
    BETA = "beta"


@dataclass(frozen=True)
class GaussianArmState:
    """N(mu_hat, 1/(k+1)) posterior over an arm's mean reward (unit-variance likelihood)"""

    family: ClassVar[PosteriorFamily] = PosteriorFamily.GAUSSIAN

    reward_sum: float = 0.0
    play_count: int = 0

    def __post_init__(self):
        if self.play_count < 0:
            raise PosteriorException(
                detail=f"play_count must be nonnegative, got {self.play_count}",
                family=self.family.value,
                error_code=ErrorCode.POSTERIOR_FAMILY_MISMATCH,
            )

    @property
    def empirical_mean(self) -> float:
        # (k+1) denominator: mu_hat is 0 before the first observation
        return self.reward_sum / (self.play_count + 1)

    @property
    def variance(self) -> float:
        return 1.0 / (self.play_count + 1)


@dataclass(frozen=True)
class BetaArmState:
    """Beta(alpha, beta) posterior over a Bernoulli arm's success probability"""

    family: ClassVar[PosteriorFamily] = PosteriorFamily.BETA

    alpha: float = 1.0
    beta: float = 1.0

    def __post_init__(self):
        if self.alpha < 1.0 or self.beta < 1.0:
            raise PosteriorException(
                detail=f"alpha and beta must be >= 1, got ({self.alpha}, {self.beta})",
                family=self.family.value,
                error_code=ErrorCode.POSTERIOR_FAMILY_MISMATCH,
            )

    @property
    def play_count(self) -> int:
        return int(round(self.alpha + self.beta - 2.0))

    @property
    def reward_sum(self) -> float:
        return self.alpha - 1.0

    @property
    def empirical_mean(self) -> float:
        return (self.alpha - 1.0) / (self.alpha + self.beta - 1.0)

    @property
    def variance(self) -> float:
        total = self.alpha + self.beta
        return self.alpha * self.beta / (total * total * (total + 1.0))


ArmPosterior = Union[GaussianArmState, BetaArmState]


def _frozen(values) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class PosteriorTable:
    """
    Posterior state of all K arms of one family, stored as arrays.

    Both families are summarised by the reward sum and the play count of each
    arm: for Beta, alpha = 1 + reward_sum and beta = 1 + play_count - reward_sum.
    Arrays are read-only; updates return a new table.
    """

    family: PosteriorFamily
    reward_sums: np.ndarray = field(repr=False)
    play_counts: np.ndarray = field(repr=False)

    def __post_init__(self):
        object.__setattr__(self, "reward_sums", _frozen(self.reward_sums))
        object.__setattr__(self, "play_counts", _frozen(self.play_counts))
        if self.reward_sums.shape != self.play_counts.shape or self.reward_sums.ndim != 1:
            raise PosteriorException(
                detail="reward_sums and play_counts must be 1-d arrays of equal length",
                family=self.family.value,
                error_code=ErrorCode.POSTERIOR_FAMILY_MISMATCH,
            )

    @property
    def n_arms(self) -> int:
        return int(self.reward_sums.shape[0])

    @property
    def empirical_means(self) -> np.ndarray:
        return self.reward_sums / (self.play_counts + 1.0)

    @property
    def alphas(self) -> np.ndarray:
        return 1.0 + self.reward_sums

    @property
    def betas(self) -> np.ndarray:
        return 1.0 + self.play_counts - self.reward_sums

    def arm(self, index: int) -> ArmPosterior:
        """Per-arm view of one arm's state"""
        if self.family is PosteriorFamily.GAUSSIAN:
            return GaussianArmState(
                reward_sum=float(self.reward_sums[index]),
                play_count=int(self.play_counts[index]),
            )
        return BetaArmState(alpha=float(self.alphas[index]), beta=float(self.betas[index]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PosteriorTable):
            return NotImplemented
        return (
            self.family is other.family
            and np.array_equal(self.reward_sums, other.reward_sums)
            and np.array_equal(self.play_counts, other.play_counts)
        )
