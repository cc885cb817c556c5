"""
run 명령
누적 / 기간별 regret 실험 실행 및 CSV 출력
"""

from pathlib import Path
from typing import Dict, List

import click

from tsvha.core.logger import logger
from tsvha.api.commands.bai import BAI_HEADER
from tsvha.api.commands.common import config_option, out_option, resolve_out_dir, seed_option, workers_option
from tsvha.api.schemas.config_loader import build_experiment_spec, load_run_config
from tsvha.domains.harness import SUMMARY_HEADER, Metric, PolicyResult, bai_sweep, run_experiment
from tsvha.infrastructures.csvio import write_rows

TRACE_HEADER = ("t",) + SUMMARY_HEADER
FINAL_HEADER = ("policy",) + SUMMARY_HEADER
REGRET_METRICS = {Metric.CUMULATIVE_REGRET, Metric.PER_PERIOD_REGRET, Metric.FINAL_REGRET_DISTRIBUTION}


def write_results(results: Dict[str, PolicyResult], metrics, out_dir: Path) -> List[Path]:
    written = []
    for label, result in results.items():
        if Metric.CUMULATIVE_REGRET in metrics:
            written.append(write_rows(out_dir / f"trace_{label}.csv", TRACE_HEADER, result.cumulative.rows()))
        if Metric.PER_PERIOD_REGRET in metrics:
            written.append(write_rows(out_dir / f"per_period_{label}.csv", TRACE_HEADER, result.per_period.rows()))
    if Metric.FINAL_REGRET_DISTRIBUTION in metrics:
        written.append(write_rows(
            out_dir / "final_regret.csv",
            FINAL_HEADER,
            ((label, *result.final.row()) for label, result in results.items()),
        ))
    return written


@click.command("run")
@config_option
@out_option
@seed_option
@workers_option
def run_command(config_path: Path, out_dir, seed, workers):
    """Regret experiment: trace_<policy>.csv, per_period_<policy>.csv, final_regret.csv (bai.csv with bai_error)"""
    config = load_run_config(config_path)
    spec = build_experiment_spec(config, config_path, seed)
    out_dir = resolve_out_dir(out_dir, config.output.directory, config_path)

    written = []
    if spec.metrics & REGRET_METRICS:
        results = run_experiment(spec, workers=workers)
        written.extend(write_results(results, spec.metrics, out_dir))
    if Metric.BAI_ERROR in spec.metrics:
        rows = bai_sweep(spec, config.bai.budgets, workers=workers)
        written.append(write_rows(out_dir / "bai.csv", BAI_HEADER, rows))
    for path in written:
        logger.info(f"[CLI] 저장: {path}")
