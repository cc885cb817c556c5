"""
Harness Schemas
실험 명세 및 집계 결과 타입
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Iterator, List, NamedTuple, Set, Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

from tsvha.domains.envs import EnvConfig, NoiseKind
from tsvha.domains.policy import PolicySpec
from tsvha.domains.posterior import PosteriorFamily

QUANTILES = (0.1, 0.25, 0.5, 0.75, 0.9)
SUMMARY_HEADER = ("mean", "std", "q10", "q25", "q50", "q75", "q90", "runs")


class InstanceMode(str, Enum):
    RESAMPLED_PER_RUN = "resampled_per_run"
    FIXED_ACROSS_RUNS = "fixed_across_runs"


class Metric(str, Enum):
    CUMULATIVE_REGRET = "cumulative_regret"
    PER_PERIOD_REGRET = "per_period_regret"
    FINAL_REGRET_DISTRIBUTION = "final_regret_distribution"
    BAI_ERROR = "bai_error"


DEFAULT_METRICS = {
    Metric.CUMULATIVE_REGRET,
    Metric.PER_PERIOD_REGRET,
    Metric.FINAL_REGRET_DISTRIBUTION,
}


class ExperimentSpec(BaseModel):
    """Monte Carlo experiment: every policy plays every run on the same instance"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    env: EnvConfig
    policies: List[PolicySpec] = Field(..., min_length=1)
    horizon: int = Field(..., ge=1, description="T")
    runs: int = Field(..., ge=1, description="R")
    base_seed: int = Field(..., ge=0, lt=2 ** 64)
    instance_mode: InstanceMode = InstanceMode.RESAMPLED_PER_RUN
    metrics: Set[Metric] = Field(default_factory=lambda: set(DEFAULT_METRICS))

    @model_validator(mode="after")
    def check_policies(self) -> "ExperimentSpec":
        # every problem is reported at once, before anything runs
        problems = []
        labels = [policy.display_name for policy in self.policies]
        duplicates = sorted({label for label in labels if labels.count(label) > 1})
        if duplicates:
            problems.append(f"duplicate policy labels {duplicates}; set 'label' to disambiguate")
        for label, policy in zip(labels, self.policies):
            if policy.posterior_family is PosteriorFamily.BETA and self.env.noise is not NoiseKind.BERNOULLI:
                problems.append(f"{label}: beta posterior needs bernoulli rewards, env noise is {self.env.noise.value}")
        if problems:
            raise ValueError("; ".join(problems))
        return self

    @property
    def labels(self) -> List[str]:
        return [policy.display_name for policy in self.policies]


@dataclass(frozen=True)
class Summary:
    """mean, sample std (ddof 1) and nearest-rank quantiles of one sample"""

    mean: float
    std: float
    quantiles: Tuple[float, ...]
    runs: int

    def row(self) -> tuple:
        return (self.mean, self.std, *self.quantiles, self.runs)


@dataclass(frozen=True, eq=False)
class RegretTrace:
    """Per-period aggregates over R runs; arrays have length T"""

    mean: np.ndarray = field(repr=False)
    std: np.ndarray = field(repr=False)
    quantiles: np.ndarray = field(repr=False)  # shape (5, T)
    runs: int

    @property
    def horizon(self) -> int:
        return int(self.mean.shape[0])

    def rows(self) -> Iterator[tuple]:
        """(t, mean, std, q10, q25, q50, q75, q90, runs) with t starting at 1"""
        for index in range(self.horizon):
            yield (
                index + 1,
                float(self.mean[index]),
                float(self.std[index]),
                *(float(q) for q in self.quantiles[:, index]),
                self.runs,
            )


@dataclass(frozen=True, eq=False)
class PolicyResult:
    label: str
    cumulative: RegretTrace
    per_period: RegretTrace
    final: Summary
    final_regrets: np.ndarray = field(repr=False)


class BAIRow(NamedTuple):
    budget: int
    policy: str
    error_rate: float
    runs: int
