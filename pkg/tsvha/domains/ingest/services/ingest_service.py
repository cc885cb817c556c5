"""
Ingest Service
CSV 데이터를 Bernoulli 밴딧 인스턴스(arm_id, mean)로 변환
"""

from pathlib import Path
from typing import List, Sequence, Tuple, Type, TypeVar

import numpy as np
from pydantic import BaseModel, ValidationError

from tsvha.core.logger import logger
from tsvha.core.exceptions import DataFormatException, ErrorCode, IngestException
from tsvha.domains.ingest.schemas.ingest_schemas import (
    ARM_MEANS_HEADER,
    COUPON_HEADER,
    EDX_HEADER,
    ArmMeanRow,
    ArmMeansTable,
    CouponRecord,
    EdxRecord,
)
from tsvha.infrastructures.csvio import PathLike, read_rows, write_rows

RecordT = TypeVar("RecordT", bound=BaseModel)

COUPON_MAX_PRICE = 200.0
COUPON_MAX_RATE = 0.3

_RANGE_ERRORS = {"greater_than", "greater_than_equal", "less_than", "less_than_equal"}


def _validate(model: Type[RecordT], row: dict, path: PathLike, line: int) -> RecordT:
    try:
        return model.model_validate(row)
    except ValidationError as e:
        first = e.errors()[0]
        field = ".".join(str(part) for part in first["loc"]) or "row"
        raise DataFormatException(
            path=str(path),
            line=line,
            detail=f"{field}: {first['msg']}",
            error_code=ErrorCode.DATA_OUT_OF_RANGE if first["type"] in _RANGE_ERRORS
            else ErrorCode.DATA_MALFORMED_ROW,
            original_exception=e,
        )


def _parse_records(path: PathLike, header: Sequence[str], model: Type[RecordT]) -> List[RecordT]:
    return [_validate(model, row, path, line) for line, row in read_rows(path, header)]


def build_table(rows: Sequence[Tuple[str, float]], path: PathLike = "<memory>") -> ArmMeansTable:
    """Validated table from (arm_id, mean) pairs"""
    parsed = []
    seen = set()
    for index, (arm_id, mean) in enumerate(rows, start=1):
        try:
            row = ArmMeanRow(arm_id=arm_id, mean=mean)
        except ValidationError as e:
            raise DataFormatException(
                path=str(path),
                detail=f"arm '{arm_id}' (row {index}): {e.errors()[0]['msg']}",
                error_code=ErrorCode.DATA_OUT_OF_RANGE,
                original_exception=e,
            )
        if row.arm_id in seen:
            raise DataFormatException(
                path=str(path),
                detail=f"duplicate arm_id '{row.arm_id}'",
                error_code=ErrorCode.DATA_DUPLICATE_ID,
            )
        seen.add(row.arm_id)
        parsed.append(row)
    return ArmMeansTable(rows=tuple(parsed))


def load_arm_means_csv(path: PathLike) -> ArmMeansTable:
    """
    arm_id,mean CSV 로드

    Raises:
        DataFileNotFoundException: 파일 없음
        DataFormatException: 형식 오류 (행 번호 포함), 범위 초과, 중복 arm_id
    """
    seen = {}
    rows = []
    for line, row in read_rows(path, ARM_MEANS_HEADER):
        parsed = _validate(ArmMeanRow, row, path, line)
        if parsed.arm_id in seen:
            raise DataFormatException(
                path=str(path),
                line=line,
                detail=f"arm_id '{parsed.arm_id}' already defined on line {seen[parsed.arm_id]}",
                error_code=ErrorCode.DATA_DUPLICATE_ID,
            )
        seen[parsed.arm_id] = line
        rows.append(parsed)

    logger.info(f"[Ingest] {path}: {len(rows)}개 arm 로드")
    return ArmMeansTable(rows=tuple(rows))


def write_arm_means_csv(table: ArmMeansTable, path: PathLike) -> Path:
    return write_rows(path, ARM_MEANS_HEADER, ((row.arm_id, row.mean) for row in table.rows))


def _check_unit(name: str, value: float, upper: float = 1.0, strict_lower: bool = False) -> None:
    lower_ok = value > 0.0 if strict_lower else value >= 0.0
    if not (lower_ok and value <= upper):
        bracket = "(" if strict_lower else "["
        raise IngestException(detail=f"{name} must be in {bracket}0, {upper:g}], got {value!r}")


def coupon_transform(purchase_rate: float, price: float) -> float:
    """purchase_rate * price / 200"""
    _check_unit("purchase_rate", purchase_rate, upper=COUPON_MAX_RATE)
    _check_unit("price", price, upper=COUPON_MAX_PRICE, strict_lower=True)
    return purchase_rate * (price / COUPON_MAX_PRICE)


def edx_transform(cert_rate: float, participation: float) -> float:
    """cert_rate * participation (participation already min-max normalised)"""
    _check_unit("cert_rate", cert_rate)
    _check_unit("participation", participation)
    return cert_rate * participation


def min_max_normalize(values: Sequence[float]) -> np.ndarray:
    """(x - min) / (max - min); a constant input maps to all ones"""
    array = np.asarray(values, dtype=float)
    if array.size == 0:
        raise IngestException(detail="cannot normalise an empty sequence")
    low, high = float(array.min()), float(array.max())
    if high == low:
        return np.ones_like(array)
    return (array - low) / (high - low)


def load_coupon_csv(path: PathLike) -> List[CouponRecord]:
    return _parse_records(path, COUPON_HEADER, CouponRecord)


def load_edx_csv(path: PathLike) -> List[EdxRecord]:
    return _parse_records(path, EDX_HEADER, EdxRecord)


def coupon_table(records: Sequence[CouponRecord], weighted: bool = False) -> ArmMeansTable:
    """
    Coupons priced at most 200 and purchased at least once.

    mean = purchase rate, or purchase rate times price / 200 when weighted.
    """
    kept = [r for r in records if r.price <= COUPON_MAX_PRICE and r.purchases >= 1]
    logger.info(f"[Ingest] coupon 필터: {len(records)}개 중 {len(kept)}개 유지")
    rows = [
        (r.coupon_id, coupon_transform(r.purchase_rate, r.price) if weighted else r.purchase_rate)
        for r in kept
    ]
    return build_table(rows)


def edx_table(records: Sequence[EdxRecord], weighted: bool = False) -> ArmMeansTable:
    """mean = certification rate, optionally times min-max participation"""
    if not records:
        return ArmMeansTable(rows=())
    participation = min_max_normalize([r.participants for r in records])
    rows = [
        (r.course_id, edx_transform(r.certification_rate, float(p)) if weighted else r.certification_rate)
        for r, p in zip(records, participation)
    ]
    return build_table(rows)
