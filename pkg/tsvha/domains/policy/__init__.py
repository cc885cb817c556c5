"""
Policy Domain
"""

from tsvha.domains.policy.schemas.policy_schemas import (
    HistoryEntry,
    PolicyKind,
    PolicySpec,
    PolicyState,
    SatisficingLog,
)
from tsvha.domains.policy.services.policy_service import (
    init_state,
    recommend_arm,
    satisficing_arm,
    select_arm,
    step,
    sts_select,
)

__all__ = [
    "HistoryEntry",
    "PolicyKind",
    "PolicySpec",
    "PolicyState",
    "SatisficingLog",
    "init_state",
    "recommend_arm",
    "satisficing_arm",
    "select_arm",
    "step",
    "sts_select",
]
