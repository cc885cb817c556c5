"""
Environment Schemas
"""

from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from tsvha.core.exceptions import EnvException, ErrorCode


class NoiseKind(str, Enum):
    """Reward distribution around the arm mean"""
    GAUSSIAN_UNIT = "gaussian_unit"
    GAUSSIAN_VAR2 = "gaussian_var2"
    BERNOULLI = "bernoulli"
    NONE = "none"


class EnvFamily(str, Enum):
    RANDOM_UNIFORM = "random_uniform"
    RANDOM_NORMAL = "random_normal"
    LINEAR_GAUSSIAN = "linear_gaussian"
    FIXED = "fixed"
    TABULAR = "tabular"


# families whose means are drawn, so K must be given
_SAMPLED = (EnvFamily.RANDOM_UNIFORM, EnvFamily.RANDOM_NORMAL, EnvFamily.LINEAR_GAUSSIAN)


class EnvConfig(BaseModel):
    """Environment configuration"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    family: EnvFamily = Field(..., description="How arm means are produced")
    arms: Optional[int] = Field(None, ge=1, description="Number of arms K")
    means: Optional[List[float]] = Field(None, min_length=1, description="Arm means (fixed)")
    table_path: Optional[Path] = Field(None, description="arm_id,mean CSV (tabular)")
    noise: NoiseKind = Field(NoiseKind.GAUSSIAN_UNIT, description="Reward noise")

    @model_validator(mode="after")
    def check_family(self) -> "EnvConfig":
        if self.family in _SAMPLED and self.arms is None:
            raise ValueError(f"{self.family.value} requires 'arms'")
        if self.family is EnvFamily.FIXED:
            if self.means is None:
                raise ValueError("fixed requires 'means'")
            if self.arms is not None and self.arms != len(self.means):
                raise ValueError(f"arms = {self.arms} but {len(self.means)} means given")
            if self.noise is NoiseKind.BERNOULLI and not all(0.0 <= m <= 1.0 for m in self.means):
                raise ValueError(f"bernoulli noise needs means in [0, 1], got {self.means}")
        if self.family is EnvFamily.TABULAR and self.table_path is None:
            raise ValueError("tabular requires 'table_path'")
        if self.family is not EnvFamily.FIXED and self.means is not None:
            raise ValueError("'means' is only valid for the fixed family")
        if self.family is not EnvFamily.TABULAR and self.table_path is not None:
            raise ValueError("'table_path' is only valid for the tabular family")
        if self.noise is NoiseKind.BERNOULLI and self.family in (EnvFamily.RANDOM_NORMAL, EnvFamily.LINEAR_GAUSSIAN):
            raise ValueError(f"bernoulli noise needs means in [0, 1], {self.family.value} means are unbounded")
        return self

    @property
    def dimension(self) -> Optional[int]:
        """Latent dimension d of the linear-Gaussian family (d = K)"""
        return self.arms if self.family is EnvFamily.LINEAR_GAUSSIAN else None


def _frozen(values) -> np.ndarray:
    array = np.array(values, dtype=float)
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class BanditInstance:
    """
    Fixed arm means plus the reward noise model.

    loadings is the K x d matrix L for linear-Gaussian instances (means = L theta),
    None otherwise.
    """

    means: np.ndarray = field(repr=False)
    noise: NoiseKind = NoiseKind.GAUSSIAN_UNIT
    loadings: Optional[np.ndarray] = field(default=None, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "means", _frozen(self.means))
        if self.loadings is not None:
            object.__setattr__(self, "loadings", _frozen(self.loadings))

        if self.means.ndim != 1 or self.means.size == 0 or not np.all(np.isfinite(self.means)):
            raise EnvException(
                detail="means must be a non-empty vector of finite values",
                error_code=ErrorCode.ENV_INVALID_MEANS,
            )
        if self.noise is NoiseKind.BERNOULLI and (self.means.min() < 0.0 or self.means.max() > 1.0):
            raise EnvException(
                detail="bernoulli noise requires every mean in [0, 1]",
                error_code=ErrorCode.ENV_INVALID_MEANS,
            )

    @property
    def n_arms(self) -> int:
        return int(self.means.size)

    @property
    def optimal_mean(self) -> float:
        return float(self.means.max())

    @property
    def optimal_arm(self) -> int:
        return int(np.argmax(self.means))

    @property
    def gaps(self) -> np.ndarray:
        return self.optimal_mean - self.means

    def instant_regret(self, arm: int) -> float:
        return self.optimal_mean - float(self.means[arm])
