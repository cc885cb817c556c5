"""
Ingest Schemas
외부 CSV 데이터의 행(row) 스키마
"""

from dataclasses import dataclass
from enum import Enum
from typing import Tuple

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, model_validator

ARM_MEANS_HEADER = ("arm_id", "mean")
COUPON_HEADER = ("coupon_id", "price", "views", "purchases")
EDX_HEADER = ("course_id", "participants", "certified")


class IngestSource(str, Enum):
    CSV = "csv"
    COUPON = "coupon"
    EDX = "edx"


class ArmMeanRow(BaseModel):
    """One arm of a Bernoulli instance"""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    arm_id: str = Field(..., min_length=1)
    mean: float = Field(..., ge=0.0, le=1.0)


class CouponRecord(BaseModel):
    """Per-coupon aggregate: views and purchases of one coupon"""

    model_config = ConfigDict(frozen=True, allow_inf_nan=False)

    coupon_id: str = Field(..., min_length=1)
    price: float = Field(..., gt=0.0, description="Final selling price")
    views: int = Field(..., ge=1)
    purchases: int = Field(..., ge=0)

    @model_validator(mode="after")
    def check_purchases(self) -> "CouponRecord":
        if self.purchases > self.views:
            raise ValueError("purchases cannot exceed views")
        return self

    @property
    def purchase_rate(self) -> float:
        return self.purchases / self.views


class EdxRecord(BaseModel):
    """Per-course participant counts"""

    model_config = ConfigDict(frozen=True)

    course_id: str = Field(..., min_length=1)
    participants: int = Field(..., ge=1)
    certified: int = Field(..., ge=0)

    @model_validator(mode="after")
    def check_certified(self) -> "EdxRecord":
        if self.certified > self.participants:
            raise ValueError("certified cannot exceed participants")
        return self

    @property
    def certification_rate(self) -> float:
        return self.certified / self.participants


@dataclass(frozen=True)
class ArmMeansTable:
    """Ordered (arm_id, mean) rows; ids are unique"""

    rows: Tuple[ArmMeanRow, ...]

    @property
    def arm_ids(self) -> Tuple[str, ...]:
        return tuple(row.arm_id for row in self.rows)

    @property
    def means(self) -> np.ndarray:
        return np.array([row.mean for row in self.rows], dtype=float)

    def __len__(self) -> int:
        return len(self.rows)
