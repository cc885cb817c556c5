"""
Posterior Schemas
"""

from tsvha.domains.posterior.schemas.posterior_schemas import (
    ArmPosterior,
    BetaArmState,
    GaussianArmState,
    PosteriorFamily,
    PosteriorTable,
)

__all__ = [
    "ArmPosterior",
    "BetaArmState",
    "GaussianArmState",
    "PosteriorFamily",
    "PosteriorTable",
]
