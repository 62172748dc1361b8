"""Checks of a computed value function against simulated stopping rules."""

from __future__ import annotations

import math

from nlstop.hfamily.gain import GainSpec
from nlstop.montecarlo.models import MCConfig, MCEstimate, RuleKind, StoppingRule, rule_for
from nlstop.montecarlo.simulate import simulate_rule
from nlstop.oracles.models import ValueTable
from nlstop.risk.base import RiskMapping
from nlstop.solver.models import Solution
from nlstop.utils.logging import get_logger
from nlstop.validation.models import CheckReport, CheckResult, CheckStatus

logger = get_logger(__name__)

DEFAULT_BIAS_CONSTANT = 1.0
WIDEN_BY = 0.1
SMALL_HALF_WIDTH = 0.05
SIGMAS = 3.0


def bias_allowance(dt: float, constant: float = DEFAULT_BIAS_CONSTANT) -> float:
    """Allowance for the O(sqrt(dt)) first-passage bias of the Euler scheme."""
    return constant * math.sqrt(dt)


def optimal_rule(source: Solution | ValueTable, x0: float) -> StoppingRule:
    """First entry to the stopping set: exit of the continuation component holding x0."""
    return rule_for(source, x0)


def suboptimal_rules(optimal: StoppingRule, x0: float) -> list[tuple[str, StoppingRule]]:
    """Perturbations of the optimal rule whose values may not exceed V(x0)."""
    rules: list[tuple[str, StoppingRule]] = [("immediate", StoppingRule.immediate())]
    if optimal.kind is RuleKind.EXIT_INTERVAL:
        a, b = optimal.a, optimal.b
        rules.append(
            ("shrunken", StoppingRule.exit_interval(x0 - 0.5 * (x0 - a), x0 + 0.5 * (b - x0)))
        )
        rules.append(
            ("widened", StoppingRule.exit_interval(max(a - WIDEN_BY, 0.0), min(b + WIDEN_BY, 1.0)))
        )
    else:
        lo, hi = max(x0 - SMALL_HALF_WIDTH, 0.0), min(x0 + SMALL_HALF_WIDTH, 1.0)
        rules.append(("small_interval", StoppingRule.exit_interval(lo, hi)))
    rules.append(("full_interval", StoppingRule.exit_interval(0.0, 1.0)))
    return rules


def _details(est: MCEstimate, v: float, allowance: float) -> dict[str, float | int]:
    return {**est.to_dict(), "V": v, "allowance": allowance}


def verify_solution(
    rm: RiskMapping,
    g: GainSpec,
    sol: Solution | ValueTable,
    x0: float,
    cfg: MCConfig,
    *,
    bias_constant: float = DEFAULT_BIAS_CONSTANT,
    threads: int | None = None,
    rule: StoppingRule | None = None,
) -> CheckReport:
    """Simulate the optimal rule and its perturbations from x0 and compare with V(x0).

    ``rule`` replaces the exit rule read off ``sol``, e.g. one built from saved
    component endpoints.
    """
    v = float(sol.value_at(x0))
    bias = bias_allowance(cfg.dt, bias_constant)
    results = []

    best = optimal_rule(sol, x0) if rule is None else rule
    est = simulate_rule(rm, g, best, x0, cfg, threads=threads)
    allowance = SIGMAS * est.std_error + bias
    gap = abs(est.value - v)
    results.append(
        CheckResult(
            check_name="optimal_rule",
            status=CheckStatus.PASS if gap <= allowance else CheckStatus.FAIL,
            message=f"{best.describe()}: estimate {est.value:.6g} vs V(x0) {v:.6g} "
            f"(|diff| {gap:.3g}, allowed {allowance:.3g})",
            details=_details(est, v, allowance),
        )
    )

    for name, rule in suboptimal_rules(best, x0):
        est = simulate_rule(rm, g, rule, x0, cfg, threads=threads)
        allowance = SIGMAS * est.std_error + bias
        excess = est.value - v
        results.append(
            CheckResult(
                check_name=f"suboptimal_{name}",
                status=CheckStatus.PASS if excess <= allowance else CheckStatus.FAIL,
                message=f"{rule.describe()}: estimate {est.value:.6g} <= V(x0) {v:.6g} "
                f"(excess {excess:.3g}, allowed {allowance:.3g})",
                details=_details(est, v, allowance),
            )
        )

    report = CheckReport(subject=f"{rm.name} {g} x0={x0:g}", results=results)
    logger.info("verify_done", x0=x0, status=report.overall_status.value)
    return report
