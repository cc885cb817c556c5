"""
bai 명령
고정 예산(fixed-budget) 최적 arm 식별 오류율
"""

from pathlib import Path

import click

from tsvha.core.logger import logger
from tsvha.core.exceptions import ConfigException
from tsvha.api.commands.common import (
    INT_LIST,
    config_option,
    out_option,
    resolve_out_dir,
    seed_option,
    workers_option,
)
from tsvha.api.schemas.config_loader import build_experiment_spec, load_run_config
from tsvha.domains.harness import bai_sweep
from tsvha.infrastructures.csvio import write_rows

BAI_HEADER = ("budget", "policy", "error_rate", "runs")


@click.command("bai")
@config_option
@out_option
@seed_option
@workers_option
@click.option("--budgets", type=INT_LIST, default=None, help="Budgets (overrides bai.budgets)")
def bai_command(config_path: Path, out_dir, seed, workers, budgets):
    """Best-arm identification error per budget: bai.csv"""
    config = load_run_config(config_path)
    spec = build_experiment_spec(config, config_path, seed)
    out_dir = resolve_out_dir(out_dir, config.output.directory, config_path)

    if budgets is None:
        if config.bai is None:
            raise ConfigException(config_path=str(config_path), detail="no budgets: set bai.budgets or pass --budgets")
        budgets = config.bai.budgets
    if any(budget < 1 for budget in budgets):
        raise click.BadParameter(f"budgets must be positive, got {budgets}", param_hint="--budgets")

    rows = bai_sweep(spec, budgets, workers=workers)
    path = write_rows(out_dir / "bai.csv", BAI_HEADER, rows)
    logger.info(f"[CLI] 저장: {path}")
