"""`nlstop verify`: Monte Carlo check of a value table at one starting point."""

from __future__ import annotations

from pathlib import Path
from typing import Optional

import typer
from typing_extensions import Annotated

from nlstop.cli.common import (
    RiskChoice,
    RunConfig,
    console,
    exit_for,
    exit_on_error,
    load_problem,
    print_report,
)


def verify_command(
    risk: Annotated[RiskChoice, typer.Option("--risk", help="Risk mapping")],
    gain: Annotated[str, typer.Option("--gain", help="poly:c0,c1,... | sin:a,b,c,d | pwl:x:y,...")],
    x0: Annotated[float, typer.Option("--x0", help="Starting position")] = 0.5,
    paths: Annotated[Optional[int], typer.Option("--paths", help="Simulated paths")] = None,
    dt: Annotated[Optional[float], typer.Option("--dt", help="Euler time step")] = None,
    seed: Annotated[Optional[int], typer.Option("--seed", help="Master seed")] = None,
    solution: Annotated[
        Optional[Path],
        typer.Option("--solution", help="Value table CSV from 'solve' (default: closed form)"),
    ] = None,
    components: Annotated[
        Optional[Path],
        typer.Option("--components", help="Components JSON from 'solve' for the exit rule"),
    ] = None,
    grid: Annotated[
        int, typer.Option("--grid", help="Grid points of the closed form without --solution")
    ] = 2001,
    threads: Annotated[Optional[int], typer.Option("--threads", help="Worker threads")] = None,
) -> None:
    """Simulate the optimal rule and its perturbations and compare with V(x0)."""
    from nlstop.config.loader import get_settings
    from nlstop.grid import Grid
    from nlstop.montecarlo import MCConfig, rule_within, verify_solution
    from nlstop.oracles import oracle_value
    from nlstop.storage.files import read_components_json, read_value_table_csv
    from nlstop.utils.logging import bind_run_context

    settings = get_settings()
    mc = settings.montecarlo
    with exit_on_error():
        cfg = RunConfig(
            command="verify",
            risk=risk,
            gain=gain,
            grid=grid,
            x0=x0,
            paths=mc.n_paths if paths is None else paths,
            dt=mc.dt if dt is None else dt,
            seed=mc.seed if seed is None else seed,
            threads=settings.threads if threads is None else threads,
        )
        bind_run_context(command=cfg.command, risk=cfg.risk.value, gain=cfg.gain, seed=cfg.seed)
        rm, g = load_problem(cfg)

        if solution is not None:
            table = read_value_table_csv(solution, settings.solver.tol_stop)
            console.print(f"Value table read from {solution}")
        else:
            table = oracle_value(rm, g, Grid(cfg.grid), settings.solver.tol_stop)

        rule = None
        if components is not None:
            records = read_components_json(components)
            rule = rule_within(((r["x_minus"], r["x_plus"]) for r in records), cfg.x0)
            console.print(f"Exit rule from {components}: {rule.describe()}")

        mc_cfg = MCConfig(
            dt=cfg.dt,
            n_paths=cfg.paths,
            seed=cfg.seed,
            t_max=mc.t_max,
            bootstrap=mc.bootstrap,
            block_size=mc.block_size,
        )
        report = verify_solution(
            rm,
            g,
            table,
            cfg.x0,
            mc_cfg,
            bias_constant=mc.bias_constant,
            threads=cfg.threads,
            rule=rule,
        )
        print_report(report)
        exit_for(report)
