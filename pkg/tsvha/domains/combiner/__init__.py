"""
Combiner Domain
"""

from tsvha.domains.combiner.schemas.combiner_schemas import CoefficientVector, CombinerKind, CombinerSpec
from tsvha.domains.combiner.services.combiner_service import (
    c1_coefficients,
    c2_coefficients,
    c3_agent_count,
    c3_combine,
    coefficients,
    combine_table,
    linear_combine,
    scaled_gaussian_sample,
    scaled_gaussian_table_sample,
    variance_scale,
)

__all__ = [
    "CoefficientVector",
    "CombinerKind",
    "CombinerSpec",
    "c1_coefficients",
    "c2_coefficients",
    "c3_agent_count",
    "c3_combine",
    "coefficients",
    "combine_table",
    "linear_combine",
    "scaled_gaussian_sample",
    "scaled_gaussian_table_sample",
    "variance_scale",
]
