"""Shared CLI plumbing: run configuration, error mapping and report tables."""

from __future__ import annotations

from collections.abc import Iterator
from contextlib import contextmanager
from enum import Enum
from pathlib import Path

import typer
from pydantic import BaseModel, Field, ValidationError, field_validator
from rich.console import Console
from rich.table import Table

from nlstop.config.settings import AppSettings
from nlstop.errors import (
    AssumptionViolationError,
    ExtensionError,
    InvalidArgumentError,
    NoRootError,
    OutputPathError,
    UnsupportedOperationError,
)
from nlstop.hfamily.gain import GainSpec
from nlstop.risk.base import RiskMapping
from nlstop.validation.models import CheckReport, CheckStatus

console = Console()
err_console = Console(stderr=True)

EXIT_FAILED_CHECKS = 1
EXIT_CONFIG = 2
EXIT_ASSUMPTION = 3

MIN_GRID_POINTS = 101

STATUS_STYLES = {
    CheckStatus.PASS: "green",
    CheckStatus.WARN: "yellow",
    CheckStatus.FAIL: "red",
}


class RiskChoice(str, Enum):
    LINEAR = "linear"
    ENTROPIC = "entropic"
    WORST_CASE = "worst-case"


class RunConfig(BaseModel):
    """One validated invocation; CLI flags already merged over settings."""

    command: str
    risk: RiskChoice
    gain: str | None = None
    grid: int = Field(default=1001, ge=MIN_GRID_POINTS)
    param_res: int = Field(default=64, ge=16)
    delta: float | None = Field(default=None, gt=0)
    x0: float = Field(default=0.5, ge=0.0, le=1.0)
    paths: int = Field(default=100_000, ge=1)
    dt: float = Field(default=1e-4, gt=0)
    seed: int = 42
    threads: int | None = Field(default=None, ge=1)
    out: Path | None = None
    components: Path | None = None

    @field_validator("gain")
    @classmethod
    def _gain_not_blank(cls, value: str | None) -> str | None:
        if value is not None and not value.strip():
            raise ValueError("gain must not be empty")
        return value


def _flag(loc: tuple[int | str, ...]) -> str:
    return "--" + ".".join(str(part) for part in loc).replace("_", "-")


@contextmanager
def exit_on_error() -> Iterator[None]:
    """Map library errors to exit codes: 2 for configuration, 3 for violated assumptions."""
    try:
        yield
    except ValidationError as exc:
        first = exc.errors()[0]
        err_console.print(
            f"[red]Error:[/red] invalid {_flag(first['loc'])}={first.get('input')!r}: "
            f"{first['msg']}"
        )
        raise typer.Exit(EXIT_CONFIG) from exc
    except (AssumptionViolationError, NoRootError, ExtensionError) as exc:
        err_console.print(f"[red]Assumption violated:[/red] {exc}")
        raise typer.Exit(EXIT_ASSUMPTION) from exc
    except (InvalidArgumentError, UnsupportedOperationError, OutputPathError) as exc:
        err_console.print(f"[red]Error:[/red] {exc}")
        raise typer.Exit(EXIT_CONFIG) from exc


def print_report(report: CheckReport) -> None:
    """Print a CheckReport as a formatted Rich table."""
    style = STATUS_STYLES.get(report.overall_status, "white")
    console.print(
        f"\n[bold]{report.subject}[/bold]: "
        f"[{style}]{report.overall_status.value.upper()}[/{style}]"
    )

    table = Table(show_header=True, header_style="bold", padding=(0, 1))
    table.add_column("Check")
    table.add_column("Status")
    table.add_column("Message")

    for result in report.results:
        s = STATUS_STYLES.get(result.status, "white")
        table.add_row(
            result.check_name,
            f"[{s}]{result.status.value}[/{s}]",
            result.message,
        )

    console.print(table)


def print_intervals(title: str, intervals: list[tuple[float, float]]) -> None:
    table = Table(title=title, show_header=True, header_style="bold")
    table.add_column("#", justify="right")
    table.add_column("x_minus", justify="right")
    table.add_column("x_plus", justify="right")
    for i, (a, b) in enumerate(intervals, start=1):
        table.add_row(str(i), f"{a:.6f}", f"{b:.6f}")
    if not intervals:
        table.add_row("-", "-", "-")
    console.print(table)


def exit_for(report: CheckReport) -> None:
    if report.overall_status is CheckStatus.FAIL:
        raise typer.Exit(EXIT_FAILED_CHECKS)


def load_problem(cfg: RunConfig) -> tuple[RiskMapping, GainSpec]:
    """Risk mapping and parsed gain for ``cfg``; a bad gain is a configuration error."""
    from nlstop.hfamily.gain import parse_gain
    from nlstop.risk.registry import get_risk_mapping

    if cfg.gain is None:
        raise InvalidArgumentError(f"'{cfg.command}' needs --gain")
    return get_risk_mapping(cfg.risk.value), parse_gain(cfg.gain)


def output_path(settings: AppSettings, path: Path | None) -> Path | None:
    return None if path is None else settings.output.resolve(path)


def float_precision(settings: AppSettings) -> int:
    # digits after the point in scientific notation
    return settings.output.float_digits - 1
