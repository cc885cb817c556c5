import click

from tsvha.core.config import settings
from tsvha.core.logger import set_log_level
from tsvha.api.commands import (
    analyze_command,
    bai_command,
    bound_command,
    ingest_command,
    run_command,
)


@click.group(name=settings.APP_NAME, help=settings.APP_DESC)
@click.version_option(settings.APP_VERSION, prog_name=settings.APP_NAME)
@click.option("-v", "--verbose", is_flag=True, help="Debug logging")
def cli(verbose: bool):
    settings.configure_for_run(verbose)
    set_log_level(settings.LOG_LEVEL)


# 서브커맨드 통합 관리
cli.add_command(run_command)
cli.add_command(bai_command)
cli.add_command(bound_command)
cli.add_command(analyze_command)
cli.add_command(ingest_command)
