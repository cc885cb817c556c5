"""CSV 입출력

UTF-8, comma-delimited, header row first. Floats are written with repr() so
every value reads back bit-exactly.
"""

import csv
from pathlib import Path
from typing import Any, Iterable, Iterator, Sequence, Tuple, Union

from tsvha.core.config import settings
from tsvha.core.logger import logger
from tsvha.core.exceptions import (
    DataFileNotFoundException,
    DataFormatException,
    DataWriteException,
    ErrorCode,
)

PathLike = Union[str, Path]


def format_value(value: Any) -> str:
    """Shortest round-trip text for floats, str() for everything else"""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def read_rows(path: PathLike, header: Sequence[str]) -> Iterator[Tuple[int, dict]]:
    """
    Yield (line number, row dict) for every data row.

    Raises:
        DataFileNotFoundException: 파일 없음
        DataFormatException: 헤더 불일치, 열 개수 불일치
    """
    path = Path(path)
    if not path.is_file():
        raise DataFileNotFoundException(str(path))

    with path.open("r", encoding=settings.CSV_ENCODING, newline="") as handle:
        reader = csv.reader(handle)
        first = next(reader, None)
        if first is None or [cell.strip() for cell in first] != list(header):
            raise DataFormatException(
                path=str(path),
                line=1,
                detail=f"expected header '{','.join(header)}', got '{','.join(first or [])}'",
                error_code=ErrorCode.DATA_BAD_HEADER,
            )
        for row in reader:
            line = reader.line_num
            if not row or all(not cell.strip() for cell in row):
                continue
            if len(row) != len(header):
                raise DataFormatException(
                    path=str(path),
                    line=line,
                    detail=f"expected {len(header)} fields, got {len(row)}",
                )
            yield line, {name: cell.strip() for name, cell in zip(header, row)}


def write_rows(path: PathLike, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    """Write header plus rows; parent directories are created"""
    path = Path(path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with path.open("w", encoding=settings.CSV_ENCODING, newline="") as handle:
            writer = csv.writer(handle, lineterminator="\n")
            writer.writerow(header)
            for row in rows:
                writer.writerow([format_value(value) for value in row])
    except OSError as e:
        logger.error(f"[CSV] {path} 쓰기 실패: {e}")
        raise DataWriteException(str(path), detail=str(e), original_exception=e)

    logger.debug(f"[CSV] {path} 저장 완료")
    return path
