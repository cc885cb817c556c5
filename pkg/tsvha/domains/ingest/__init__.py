"""
Ingest Domain
"""

from tsvha.domains.ingest.schemas.ingest_schemas import (
    ArmMeanRow,
    ArmMeansTable,
    CouponRecord,
    EdxRecord,
    IngestSource,
)
from tsvha.domains.ingest.services.ingest_service import (
    build_table,
    coupon_table,
    coupon_transform,
    edx_table,
    edx_transform,
    load_arm_means_csv,
    load_coupon_csv,
    load_edx_csv,
    min_max_normalize,
    write_arm_means_csv,
)

__all__ = [
    "ArmMeanRow",
    "ArmMeansTable",
    "CouponRecord",
    "EdxRecord",
    "IngestSource",
    "build_table",
    "coupon_table",
    "coupon_transform",
    "edx_table",
    "edx_transform",
    "load_arm_means_csv",
    "load_coupon_csv",
    "load_edx_csv",
    "min_max_normalize",
    "write_arm_means_csv",
]
