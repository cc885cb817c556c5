"""CSV Infrastructure Module

Usage:
    from tsvha.infrastructures.csvio import read_rows, write_rows

    for line, row in read_rows("instance.csv", ("arm_id", "mean")):
        ...
    write_rows("out/trace_TS.csv", ("t", "mean"), [(1, 0.25)])
"""

from tsvha.infrastructures.csvio.base import PathLike, format_value, read_rows, write_rows

__all__ = [
    "PathLike",
    "format_value",
    "read_rows",
    "write_rows",
]
