"""
Posterior Domain
"""

from tsvha.domains.posterior.schemas.posterior_schemas import (
    ArmPosterior,
    BetaArmState,
    GaussianArmState,
    PosteriorFamily,
    PosteriorTable,
)
from tsvha.domains.posterior.services.posterior_service import (
    empirical_mean,
    init_posterior,
    init_table,
    posterior_mean,
    posterior_variance,
    sample,
    sample_table,
    update,
    update_table,
)

__all__ = [
    "ArmPosterior",
    "BetaArmState",
    "GaussianArmState",
    "PosteriorFamily",
    "PosteriorTable",
    "empirical_mean",
    "init_posterior",
    "init_table",
    "posterior_mean",
    "posterior_variance",
    "sample",
    "sample_table",
    "update",
    "update_table",
]
