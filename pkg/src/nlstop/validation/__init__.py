"""Axiom checks and the shared pass/warn/fail report models."""

from nlstop.validation.models import CheckReport, CheckResult, CheckStatus
from nlstop.validation.runner import check_axioms, check_strictness

__all__ = [
    "CheckReport",
    "CheckResult",
    "CheckStatus",
    "check_axioms",
    "check_strictness",
]
