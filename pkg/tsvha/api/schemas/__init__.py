"""
Run Config Schemas
"""

from tsvha.api.schemas.config_loader import build_experiment_spec, load_run_config
from tsvha.api.schemas.run_config import (
    BaiSection,
    ExperimentSection,
    OutputSection,
    RunConfig,
)

__all__ = [
    "BaiSection",
    "ExperimentSection",
    "OutputSection",
    "RunConfig",
    "build_experiment_spec",
    "load_run_config",
]
