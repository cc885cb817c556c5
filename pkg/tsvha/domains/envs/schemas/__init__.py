"""
Environment Schemas
"""

from tsvha.domains.envs.schemas.envs_schemas import (
    BanditInstance,
    EnvConfig,
    EnvFamily,
    NoiseKind,
)

__all__ = [
    "BanditInstance",
    "EnvConfig",
    "EnvFamily",
    "NoiseKind",
]
