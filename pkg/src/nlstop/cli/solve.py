"""`nlstop solve`: value function and continuation components by the smooth-fit walk."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer
from rich.table import Table
from typing_extensions import Annotated

from nlstop.cli.common import (
    RiskChoice,
    RunConfig,
    console,
    exit_for,
    exit_on_error,
    float_precision,
    load_problem,
    output_path,
    print_report,
)


def solve_command(
    risk: Annotated[RiskChoice, typer.Option("--risk", help="Risk mapping")],
    gain: Annotated[str, typer.Option("--gain", help="poly:c0,c1,... | sin:a,b,c,d | pwl:x:y,...")],
    grid: Annotated[int, typer.Option("--grid", help="Grid points on [0, 1]")] = 1001,
    delta: Annotated[
        Optional[float], typer.Option("--delta", help="Walk step (default: factor x spacing)")
    ] = None,
    mesh: Annotated[Optional[int], typer.Option("--mesh", help="Tangency scan cells")] = None,
    out: Annotated[Optional[Path], typer.Option("--out", help="CSV of x, g, V, stopping")] = None,
    components: Annotated[
        Optional[Path], typer.Option("--components", help="JSON list of components")
    ] = None,
    cross_check: Annotated[
        bool, typer.Option("--cross-check", help="Compare V with the direct majorant")
    ] = False,
    param_res: Annotated[
        Optional[int], typer.Option("--param-res", help="Majorant resolution for --cross-check")
    ] = None,
    extend: Annotated[
        bool, typer.Option("--extend", help="Print the H parameters of every component")
    ] = False,
    threads: Annotated[Optional[int], typer.Option("--threads", help="Worker threads")] = None,
) -> None:
    """Solve the stopping problem for a differentiable risk mapping."""
    from nlstop.config.loader import get_settings
    from nlstop.grid import Grid
    from nlstop.solver import cross_check_majorant, extend_to_H, solve
    from nlstop.storage.files import value_table_frame, write_components_json, write_csv
    from nlstop.utils.logging import bind_run_context

    settings = get_settings()
    with exit_on_error():
        cfg = RunConfig(
            command="solve",
            risk=risk,
            gain=gain,
            grid=grid,
            delta=delta,
            param_res=settings.majorant.param_res if param_res is None else param_res,
            threads=settings.threads if threads is None else threads,
            out=out,
            components=components,
        )
        bind_run_context(command=cfg.command, risk=cfg.risk.value, gain=cfg.gain)
        rm, g = load_problem(cfg)
        points = Grid(cfg.grid)
        s = settings.solver
        solution = solve(
            rm,
            g,
            points,
            cfg.delta if cfg.delta is not None else s.delta_factor * points.spacing,
            tol_stop=s.tol_stop,
            tol_tan=s.tol_tan,
            mesh=mesh or s.mesh,
            newton_iterations=s.newton_iterations,
            min_width_cells=s.min_width_cells,
            threads=cfg.threads,
        )

        table = Table(title=f"Continuation components ({rm.name}, {g})", header_style="bold")
        for column in ("x_minus", "x_plus", "beta", "gamma"):
            table.add_column(column, justify="right")
        if extend:
            for column in ("y", "z", "H beta", "H gamma"):
                table.add_column(column, justify="right")
        for comp in solution.components:
            row = [f"{v:.6f}" for v in comp.to_dict().values()]
            if extend:
                hp = extend_to_H(rm, g, comp, s.delta_ext)
                row += [f"{hp.y:.6f}", f"{hp.z:.6f}", f"{hp.beta:.6f}", f"{hp.gamma:.6f}"]
            table.add_row(*row)
        console.print(table)
        if not solution.components:
            console.print("No continuation region: V = g everywhere.")

        if (path := output_path(settings, cfg.out)) is not None:
            write_csv(value_table_frame(solution.value_table), path, float_precision(settings))
            console.print(f"Value table written to {path}")
        if (path := output_path(settings, cfg.components)) is not None:
            write_components_json(solution.components, path)
            console.print(f"Components written to {path}")

        if cross_check:
            from nlstop.majorant import compute_majorant

            majorant = compute_majorant(
                rm,
                g,
                points,
                cfg.param_res,
                refine_iterations=settings.majorant.refine_iterations,
                tol_dom=settings.majorant.tol_dom,
                threads=cfg.threads,
            )
            report = cross_check_majorant(solution, majorant)
            print_report(report)
            exit_for(report)
