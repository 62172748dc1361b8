"""Risk mappings on finitely supported laws."""

from nlstop.risk.base import RiskKind, RiskMapping, eval_discrete, eval_two_point
from nlstop.risk.builtins import entropic, linear, worst_case
from nlstop.risk.laws import DiscreteLaw, TwoPointLaw
from nlstop.risk.registry import available_risk_mappings, get_risk_mapping

__all__ = [
    "DiscreteLaw",
    "RiskKind",
    "RiskMapping",
    "TwoPointLaw",
    "available_risk_mappings",
    "entropic",
    "eval_discrete",
    "eval_two_point",
    "get_risk_mapping",
    "linear",
    "worst_case",
]
