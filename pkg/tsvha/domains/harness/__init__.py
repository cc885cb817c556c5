"""
Harness Domain
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
from tsvha.domains.harness.services.harness_service import (
    aggregate,
    aggregate_trace,
    bai_error_rates,
    bai_experiment,
    bai_sweep,
    derive_run_rng,
    play,
    resolve_workers,
    run_bai_single,
    run_experiment,
    run_seed_sequence,
    run_single,
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
    "aggregate",
    "aggregate_trace",
    "bai_error_rates",
    "bai_experiment",
    "bai_sweep",
    "derive_run_rng",
    "play",
    "resolve_workers",
    "run_bai_single",
    "run_experiment",
    "run_seed_sequence",
    "run_single",
]
