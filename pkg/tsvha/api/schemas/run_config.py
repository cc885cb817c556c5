"""
Run Config Schemas
YAML 실험 설정 파일 스키마 (unknown keys rejected)
"""

from pathlib import Path
from typing import List, Optional, Set

from pydantic import BaseModel, ConfigDict, Field, model_validator

from tsvha.domains.envs import EnvConfig
from tsvha.domains.harness import DEFAULT_METRICS, ExperimentSpec, InstanceMode, Metric
from tsvha.domains.policy import PolicySpec


class ExperimentSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    horizon: int = Field(..., ge=1, description="Periods per run (T)")
    runs: int = Field(..., ge=1, description="Replications (R)")
    seed: int = Field(..., ge=0, lt=2 ** 64, description="Base seed, overridden by --seed")
    instance_mode: InstanceMode = InstanceMode.RESAMPLED_PER_RUN
    metrics: Set[Metric] = Field(default_factory=lambda: set(DEFAULT_METRICS))


class OutputSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    directory: Optional[Path] = Field(None, description="Output directory, overridden by --out")


class BaiSection(BaseModel):
    model_config = ConfigDict(extra="forbid")

    budgets: List[int] = Field(..., min_length=1, description="Fixed budgets (pulls per run)")


class RunConfig(BaseModel):
    """Complete experiment config document"""

    model_config = ConfigDict(extra="forbid")

    experiment: ExperimentSection
    env: EnvConfig
    policies: List[PolicySpec] = Field(..., min_length=1)
    output: OutputSection = Field(default_factory=OutputSection)
    bai: Optional[BaiSection] = None

    @model_validator(mode="after")
    def check_bai_metric(self) -> "RunConfig":
        if Metric.BAI_ERROR in self.experiment.metrics and self.bai is None:
            raise ValueError("metric bai_error requires bai.budgets")
        return self

    def to_experiment_spec(self, seed: Optional[int] = None) -> ExperimentSpec:
        return ExperimentSpec(
            env=self.env,
            policies=self.policies,
            horizon=self.experiment.horizon,
            runs=self.experiment.runs,
            base_seed=self.experiment.seed if seed is None else seed,
            instance_mode=self.experiment.instance_mode,
            metrics=self.experiment.metrics,
        )
