"""`nlstop oracle`: closed-form value functions for the built-in mappings."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer
from typing_extensions import Annotated

from nlstop.cli.common import (
    RiskChoice,
    RunConfig,
    console,
    exit_on_error,
    float_precision,
    load_problem,
    output_path,
    print_intervals,
)


def oracle_command(
    risk: Annotated[RiskChoice, typer.Option("--risk", help="Risk mapping")],
    gain: Annotated[str, typer.Option("--gain", help="poly:c0,c1,... | sin:a,b,c,d | pwl:x:y,...")],
    grid: Annotated[int, typer.Option("--grid", help="Grid points on [0, 1]")] = 1001,
    out: Annotated[Optional[Path], typer.Option("--out", help="CSV of x, g, V, stopping")] = None,
) -> None:
    """Tabulate the closed-form value function and its continuation intervals."""
    from nlstop.config.loader import get_settings
    from nlstop.grid import Grid
    from nlstop.oracles import oracle_value
    from nlstop.storage.files import value_table_frame, write_csv
    from nlstop.utils.logging import bind_run_context

    settings = get_settings()
    with exit_on_error():
        cfg = RunConfig(command="oracle", risk=risk, gain=gain, grid=grid, out=out)
        bind_run_context(command=cfg.command, risk=cfg.risk.value, gain=cfg.gain)
        rm, g = load_problem(cfg)
        table = oracle_value(rm, g, Grid(cfg.grid), settings.solver.tol_stop)

        print_intervals(f"Continuation intervals ({rm.name}, {g})", table.continuation_intervals())

        if (path := output_path(settings, cfg.out)) is not None:
            write_csv(value_table_frame(table), path, float_precision(settings))
            console.print(f"Value table written to {path}")
