"""
surfnav command-line entry point.

Exit codes: 0 success, 1 usage error, 2 runtime failure.
"""
import sys
from typing import Optional, Sequence

import click

from app.commands import cli
from surfnav.exceptions import SurfNavError
from surfnav.utils.logging.logger import detach_run_logs, get_logger

logger = get_logger("surfnav.main")

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAILURE = 2


def _dispatch(argv: Optional[Sequence[str]]) -> int:
    try:
        cli.main(args=list(argv) if argv is not None else None, prog_name="surfnav", standalone_mode=False)
    except click.UsageError as e:
        e.show()
        return EXIT_USAGE
    except click.Abort:
        click.echo("Aborted!", err=True)
        return EXIT_FAILURE
    except click.ClickException as e:
        e.show()
        return EXIT_FAILURE
    except SurfNavError as e:
        logger.error(f"{type(e).__name__}: {e}")
        return EXIT_FAILURE
    except Exception as e:
        logger.exception(f"unexpected failure: {e}")
        return EXIT_FAILURE
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and map failures to exit codes; failures also land in the run's log."""
    try:
        return _dispatch(argv)
    finally:
        detach_run_logs()


if __name__ == "__main__":
    sys.exit(main())
