"""`nlstop axioms`: randomized checks of the risk-mapping axioms."""

from __future__ import annotations

import typer
from typing_extensions import Annotated

from nlstop.cli.common import RiskChoice, RunConfig, exit_for, exit_on_error, print_report


def axioms_command(
    risk: Annotated[RiskChoice, typer.Option("--risk", help="Risk mapping")],
    trials: Annotated[int, typer.Option("--trials", min=1, help="Random laws per axiom")] = 1000,
    seed: Annotated[int, typer.Option("--seed", help="Seed of the law generator")] = 42,
    strict: Annotated[
        bool, typer.Option("--strict", help="Also check strong monotonicity")
    ] = False,
) -> None:
    """Check normalisation, monotonicity and translation on random laws."""
    from nlstop.risk.registry import get_risk_mapping
    from nlstop.utils.logging import bind_run_context
    from nlstop.validation import check_axioms, check_strictness
    from nlstop.validation.models import CheckReport

    with exit_on_error():
        cfg = RunConfig(command="axioms", risk=risk, seed=seed)
        bind_run_context(command=cfg.command, risk=cfg.risk.value, seed=cfg.seed)
        rm = get_risk_mapping(cfg.risk.value)
        report = check_axioms(rm, trials=trials, seed=cfg.seed)
        if strict:
            strong = check_strictness(rm, trials=trials, seed=cfg.seed)
            report = CheckReport(subject=report.subject, results=report.results + strong.results)
        print_report(report)
        exit_for(report)
