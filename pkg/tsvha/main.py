import sys
from typing import Optional, Sequence

import click

from tsvha.core.config import settings
from tsvha.core.exceptions import describe_exception, handle_exception
from tsvha.api import cli


def execute(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one CLI invocation and return its exit status.

    0 success, 2 usage or config error, 1 runtime error.
    """
    try:
        result = cli.main(
            args=list(argv) if argv is not None else None,
            prog_name=settings.APP_NAME,
            standalone_mode=False,
        )
    except click.ClickException as e:
        # 잘못된 서브커맨드 / 옵션: usage 메시지는 stderr
        e.show()
        return e.exit_code
    except click.Abort:
        click.echo("Aborted!", err=True)
        return 1
    except Exception as e:
        status = handle_exception(e)
        click.echo(describe_exception(e), err=True)
        return status

    # --help / --version return their exit code
    return result if isinstance(result, int) else 0


def main() -> None:
    sys.exit(execute())
