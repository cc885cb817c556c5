"""
Theory Schemas
"""

from enum import Enum
from typing import List, NamedTuple

from pydantic import BaseModel, ConfigDict, Field, model_validator


class SelectionVariant(str, Enum):
    """Decision statistic whose selection probability is evaluated"""
    TS = "ts"
    C1 = "c1"
    C2 = "c2"


class BoundParams(BaseModel):
    """
    Inputs of the expected-regret upper bound.

    gaps holds Delta_2..Delta_K of the suboptimal arms, so K = len(gaps) + 1.
    The branch constraint on 2 beta / gamma - epsilon is checked by the
    evaluator, which names the violated constraint.
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    gamma: float = Field(..., gt=0.0, description="Variance scaling factor")
    beta: float = Field(..., ge=1.0, lt=2.0)
    epsilon: float = Field(..., gt=0.0)
    gaps: List[float] = Field(default_factory=list, description="Positive gaps of the suboptimal arms")
    horizon: int = Field(..., ge=1, description="T")

    @model_validator(mode="after")
    def check_gaps(self) -> "BoundParams":
        if any(not gap > 0.0 for gap in self.gaps):
            raise ValueError("every gap must be positive")
        if self.horizon < self.n_arms:
            raise ValueError(f"horizon {self.horizon} is smaller than K = {self.n_arms}")
        return self

    @property
    def n_arms(self) -> int:
        return len(self.gaps) + 1

    @property
    def exponent(self) -> float:
        """2 beta / gamma - epsilon"""
        return 2.0 * self.beta / self.gamma - self.epsilon


class BoundRow(NamedTuple):
    gamma: float
    beta: float
    epsilon: float
    T: int
    bound: float


class SelectionRow(NamedTuple):
    mu1: float
    mu2: float
    k1: int
    k2: int
    variant: str
    N: int
    p_star: float
