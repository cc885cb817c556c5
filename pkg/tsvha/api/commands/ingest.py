"""
ingest 명령
외부 CSV -> instance.csv (arm_id,mean)
"""

from pathlib import Path

import click

from tsvha.core.logger import logger
from tsvha.domains.ingest import (
    IngestSource,
    coupon_table,
    edx_table,
    load_arm_means_csv,
    load_coupon_csv,
    load_edx_csv,
    write_arm_means_csv,
)


@click.command("ingest")
@click.option("--source", type=click.Choice([s.value for s in IngestSource]), required=True)
@click.option("--input", "input_path", type=click.Path(path_type=Path, dir_okay=False), required=True)
@click.option("--out", "out_dir", type=click.Path(path_type=Path, file_okay=False), required=True)
@click.option("--weighted", is_flag=True, help="coupon: rate x price/200, edx: rate x participation")
def ingest_command(source: str, input_path: Path, out_dir: Path, weighted: bool):
    """Build a Bernoulli instance file: instance.csv"""
    source = IngestSource(source)
    if source is IngestSource.COUPON:
        table = coupon_table(load_coupon_csv(input_path), weighted=weighted)
    elif source is IngestSource.EDX:
        table = edx_table(load_edx_csv(input_path), weighted=weighted)
    else:
        table = load_arm_means_csv(input_path)

    path = write_arm_means_csv(table, out_dir / "instance.csv")
    logger.info(f"[CLI] 저장: {path} ({len(table)} arms)")
