"""
Harness Schemas
"""

from tsvha.domains.harness.schemas.harness_schemas import (
    DEFAULT_METRICS,
    QUANTILES,
    SUMMARY_HEADER,
    BAIRow,
    ExperimentSpec,
    InstanceMode,
    Metric,
    PolicyResult,
    RegretTrace,
    Summary,
)

__all__ = [
    "DEFAULT_METRICS",
    "QUANTILES",
    "SUMMARY_HEADER",
    "BAIRow",
    "ExperimentSpec",
    "InstanceMode",
    "Metric",
    "PolicyResult",
    "RegretTrace",
    "Summary",
]
