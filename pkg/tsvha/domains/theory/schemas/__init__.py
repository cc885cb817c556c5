"""
Theory Schemas
"""

from tsvha.domains.theory.schemas.theory_schemas import (
    BoundParams,
    BoundRow,
    SelectionRow,
    SelectionVariant,
)

__all__ = [
    "BoundParams",
    "BoundRow",
    "SelectionRow",
    "SelectionVariant",
]
