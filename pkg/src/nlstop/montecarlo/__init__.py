"""Monte Carlo verification of stopping rules."""

from nlstop.montecarlo.models import MCConfig, MCEstimate, RuleKind, StoppingRule, rule_within
from nlstop.montecarlo.simulate import simulate_rule
from nlstop.montecarlo.verify import (
    bias_allowance,
    optimal_rule,
    suboptimal_rules,
    verify_solution,
)

__all__ = [
    "MCConfig",
    "MCEstimate",
    "RuleKind",
    "StoppingRule",
    "bias_allowance",
    "optimal_rule",
    "rule_within",
    "simulate_rule",
    "suboptimal_rules",
    "verify_solution",
]
