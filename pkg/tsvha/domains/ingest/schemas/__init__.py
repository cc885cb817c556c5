"""
Ingest Schemas
"""

from tsvha.domains.ingest.schemas.ingest_schemas import (
    ARM_MEANS_HEADER,
    COUPON_HEADER,
    EDX_HEADER,
    ArmMeanRow,
    ArmMeansTable,
    CouponRecord,
    EdxRecord,
    IngestSource,
)

__all__ = [
    "ARM_MEANS_HEADER",
    "COUPON_HEADER",
    "EDX_HEADER",
    "ArmMeanRow",
    "ArmMeansTable",
    "CouponRecord",
    "EdxRecord",
    "IngestSource",
]
