"""`nlstop majorant`: the pointwise infimum of dominating members of H."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import numpy as np
import typer
from rich.table import Table
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


def majorant_command(
    risk: Annotated[RiskChoice, typer.Option("--risk", help="Risk mapping")],
    gain: Annotated[str, typer.Option("--gain", help="poly:c0,c1,... | sin:a,b,c,d | pwl:x:y,...")],
    grid: Annotated[int, typer.Option("--grid", help="Grid points on [0, 1]")] = 1001,
    param_res: Annotated[
        Optional[int], typer.Option("--param-res", help="Grid points per parameter axis")
    ] = None,
    refine: Annotated[
        Optional[int], typer.Option("--refine", help="Pattern-search iterations (0 = off)")
    ] = None,
    out: Annotated[
        Optional[Path], typer.Option("--out", help="CSV of x, g, w, y, z, beta, gamma")
    ] = None,
    threads: Annotated[Optional[int], typer.Option("--threads", help="Worker threads")] = None,
) -> None:
    """Compute the majorant w directly by searching H."""
    from nlstop.config.loader import get_settings
    from nlstop.grid import Grid
    from nlstop.majorant import compute_majorant
    from nlstop.oracles.models import ValueTable
    from nlstop.storage.files import majorant_frame, write_csv
    from nlstop.utils.logging import bind_run_context

    settings = get_settings()
    with exit_on_error():
        cfg = RunConfig(
            command="majorant",
            risk=risk,
            gain=gain,
            grid=grid,
            param_res=settings.majorant.param_res if param_res is None else param_res,
            threads=settings.threads if threads is None else threads,
            out=out,
        )
        bind_run_context(command=cfg.command, risk=cfg.risk.value, gain=cfg.gain)
        rm, g = load_problem(cfg)
        points = Grid(cfg.grid)
        result = compute_majorant(
            rm,
            g,
            points,
            cfg.param_res,
            refine_iterations=settings.majorant.refine_iterations if refine is None else refine,
            tol_dom=settings.majorant.tol_dom,
            threads=cfg.threads,
        )

        slack = result.w_values - result.g_values
        summary = Table(title=f"Majorant ({rm.name}, {g})", header_style="bold")
        summary.add_column("Quantity")
        summary.add_column("Value", justify="right")
        summary.add_row("grid points", str(len(points)))
        summary.add_row("g_bar", f"{result.g_bar:.6g}")
        summary.add_row("min(w - g)", f"{float(np.min(slack)):.3g}")
        summary.add_row("max(w - g)", f"{float(np.max(slack)):.3g}")
        summary.add_row("max w", f"{float(np.max(result.w_values)):.6g}")
        console.print(summary)

        table = ValueTable(points, result.g_values, result.w_values, settings.solver.tol_stop)
        print_intervals("Region where w > g", table.continuation_intervals())

        if (path := output_path(settings, cfg.out)) is not None:
            write_csv(majorant_frame(result), path, float_precision(settings))
            console.print(f"Majorant written to {path}")
