"""
Combiner Schemas
"""

from tsvha.domains.combiner.schemas.combiner_schemas import (
    CoefficientVector,
    CombinerKind,
    CombinerSpec,
)

__all__ = [
    "CoefficientVector",
    "CombinerKind",
    "CombinerSpec",
]
