"""Root CLI application."""

from __future__ import annotations

from collections.abc import Sequence

import click
import typer

from nlstop.cli.axioms import axioms_command
from nlstop.cli.majorant import majorant_command
from nlstop.cli.oracle import oracle_command
from nlstop.cli.solve import solve_command
from nlstop.cli.verify import verify_command

app = typer.Typer(
    name="nlstop",
    help="Optimal stopping of absorbed Brownian motion under risk mappings.",
    no_args_is_help=True,
)

app.command("solve", help="Value function and components by the smooth-fit walk")(solve_command)
app.command("majorant", help="Direct majorant search over H")(majorant_command)
app.command("oracle", help="Closed-form value for a built-in mapping")(oracle_command)
app.command("verify", help="Monte Carlo check of V at a starting point")(verify_command)
app.command("axioms", help="Randomized risk-mapping axiom checks")(axioms_command)


def run(argv: Sequence[str] | None = None) -> int:
    """Parse ``argv``, dispatch and return the exit code instead of exiting."""
    try:
        rv = app(
            args=None if argv is None else list(argv),
            prog_name="nlstop",
            standalone_mode=False,
        )
    except click.ClickException as exc:
        # unknown flags and bad option values, reported with the offending token
        exc.show()
        return exc.exit_code
    except click.exceptions.Abort:
        return 1
    return rv if isinstance(rv, int) else 0


def main() -> None:
    from nlstop.config.loader import get_settings
    from nlstop.utils.logging import setup_logging

    settings = get_settings()
    setup_logging(settings.log_level, settings.log_format)
    raise SystemExit(run())
