"""
Environment Domain
"""

from tsvha.domains.envs.schemas.envs_schemas import (
    BanditInstance,
    EnvConfig,
    EnvFamily,
    NoiseKind,
)
from tsvha.domains.envs.services.envs_service import (
    gaps,
    instant_regret,
    make_instance,
    resolve_config,
    pull,
)

__all__ = [
    "BanditInstance",
    "EnvConfig",
    "EnvFamily",
    "NoiseKind",
    "gaps",
    "instant_regret",
    "make_instance",
    "resolve_config",
    "pull",
]
