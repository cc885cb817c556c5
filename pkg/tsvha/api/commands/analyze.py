"""
analyze 명령
2-arm Gaussian 상태에서의 최적 arm 선택 확률 표
"""

from pathlib import Path

import click

from tsvha.core.logger import logger
from tsvha.api.commands.common import FLOAT_LIST, INT_LIST
from tsvha.domains.theory import selection_table
from tsvha.infrastructures.csvio import write_rows

ANALYZE_HEADER = ("mu1", "mu2", "k1", "k2", "variant", "N", "p_star")


@click.command("analyze")
@click.option("--mu1", type=FLOAT_LIST, required=True, help="Empirical mean of arm 1")
@click.option("--mu2", type=FLOAT_LIST, required=True, help="Empirical mean of arm 2")
@click.option("--k1", type=INT_LIST, required=True, help="Play count of arm 1")
@click.option("--k2", type=INT_LIST, required=True, help="Play count of arm 2")
@click.option("--agents", type=INT_LIST, default="2", show_default=True, help="Agent counts N for C1 / C2")
@click.option("--out", "out_dir", type=click.Path(path_type=Path, file_okay=False), required=True)
def analyze_command(mu1, mu2, k1, k2, agents, out_dir: Path):
    """Selection probabilities under TS, C1(N) and C2(N): analyze.csv"""
    rows = selection_table(mu1, mu2, k1, k2, agents)
    path = write_rows(out_dir / "analyze.csv", ANALYZE_HEADER, rows)
    logger.info(f"[CLI] 저장: {path}")
