"""
bound 명령
regret 상한 sweep
"""

from pathlib import Path

import click

from tsvha.core.logger import logger
from tsvha.api.commands.common import FLOAT_LIST, INT_LIST
from tsvha.domains.theory import bound_sweep
from tsvha.infrastructures.csvio import write_rows

BOUND_HEADER = ("gamma", "beta", "epsilon", "T", "bound")


@click.command("bound")
@click.option("--gamma", "gammas", type=FLOAT_LIST, required=True, help="Variance scaling factors")
@click.option("--beta", "betas", type=FLOAT_LIST, required=True, help="beta values in [1, 2)")
@click.option("--eps", "epsilons", type=FLOAT_LIST, required=True, help="epsilon values")
@click.option("--T", "horizons", type=INT_LIST, required=True, help="Horizons")
@click.option("--gaps", type=FLOAT_LIST, required=True, help="Gaps of the suboptimal arms")
@click.option("--out", "out_dir", type=click.Path(path_type=Path, file_okay=False), required=True)
def bound_command(gammas, betas, epsilons, horizons, gaps, out_dir: Path):
    """Expected-regret upper bound over a parameter grid: bound.csv"""
    rows = bound_sweep(gammas, betas, epsilons, horizons, gaps)
    path = write_rows(out_dir / "bound.csv", BOUND_HEADER, rows)
    logger.info(f"[CLI] 저장: {path}")
