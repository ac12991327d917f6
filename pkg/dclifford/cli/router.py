"""The typer application; command functions live in ``dclifford.cli.commands``."""
from typing import List, Optional

import typer

try:  # typer >= 0.26 vendors its own click and raises that copy's exceptions
    from typer import _click as click
except ImportError:
    import click

from dclifford.cli.commands.algebra import apply_command, convert_command, eval_command
from dclifford.cli.commands.fischer import decompose_command, harmonic_command, kernel_command
from dclifford.cli.commands.registry import claims_command, verify_command
from dclifford.core.config import settings
from dclifford.core.logging import set_level

cli_app = typer.Typer(
    name=settings.app_name,
    help=settings.app_description,
    add_completion=False,
    no_args_is_help=True,
)


@cli_app.callback()
def configure(
    log_level: Optional[str] = typer.Option(None, "--log-level", help="DEBUG, INFO, WARNING or ERROR"),
):
    if log_level:
        set_level(log_level)


# Register all commands
cli_app.command("apply")(apply_command)
cli_app.command("decompose")(decompose_command)
cli_app.command("harmonic")(harmonic_command)
cli_app.command("kernel")(kernel_command)
cli_app.command("verify")(verify_command)
cli_app.command("claims")(claims_command)
cli_app.command("convert")(convert_command)
cli_app.command("eval")(eval_command)


def cli_main(argv: Optional[List[str]] = None) -> int:
    """Run the app and return its exit code instead of exiting."""
    try:
        result = cli_app(args=argv, prog_name=settings.app_name, standalone_mode=False)
    except click.exceptions.UsageError as exc:
        exc.show()
        return 2
    except click.exceptions.ClickException as exc:
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    return result if isinstance(result, int) else 0
