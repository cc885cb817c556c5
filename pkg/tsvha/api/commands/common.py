"""
Command Helpers
공통 옵션 타입 및 출력 경로 처리
"""

from pathlib import Path
from typing import Callable, List, Optional

import click

from tsvha.core.exceptions import ConfigException, ErrorCode


class CommaList(click.ParamType):
    """Comma-separated values converted one by one ("0.5,1,2")"""

    def __init__(self, convert: Callable, name: str):
        self._convert = convert
        self.name = f"{name}[,{name}...]"

    def convert(self, value, param, ctx) -> List:
        if isinstance(value, list):
            return value
        items = [item.strip() for item in str(value).split(",")]
        if not all(items):
            self.fail(f"empty item in '{value}'", param, ctx)
        try:
            return [self._convert(item) for item in items]
        except ValueError:
            self.fail(f"'{value}' is not a comma-separated list of {self.name.split('[')[0]}", param, ctx)


FLOAT_LIST = CommaList(float, "float")
INT_LIST = CommaList(int, "int")

SEED = click.IntRange(0, 2 ** 64 - 1)

config_option = click.option(
    "--config", "config_path", required=True,
    type=click.Path(path_type=Path, dir_okay=False),
    help="YAML experiment config",
)
out_option = click.option(
    "--out", "out_dir", type=click.Path(path_type=Path, file_okay=False),
    help="Output directory (overrides output.directory)",
)
seed_option = click.option("--seed", type=SEED, default=None, help="Base seed (overrides experiment.seed)")
workers_option = click.option(
    "--workers", type=click.IntRange(min=1), default=None,
    help="Worker processes (default: available parallelism)",
)


def resolve_out_dir(out_dir: Optional[Path], configured: Optional[Path], config_path: Path) -> Path:
    """--out wins over the config; one of them is required"""
    directory = out_dir or configured
    if directory is None:
        raise ConfigException(
            config_path=str(config_path),
            detail="no output directory: pass --out or set output.directory",
            error_code=ErrorCode.CONFIG_INVALID,
        )
    return directory
