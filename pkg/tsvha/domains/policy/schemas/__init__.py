"""
Policy Schemas
"""

from tsvha.domains.policy.schemas.policy_schemas import (
    HistoryEntry,
    PolicyKind,
    PolicySpec,
    PolicyState,
    SatisficingLog,
)

__all__ = [
    "HistoryEntry",
    "PolicyKind",
    "PolicySpec",
    "PolicyState",
    "SatisficingLog",
]
