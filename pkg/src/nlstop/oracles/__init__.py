"""Closed-form value functions used as fast solvers and as ground truth."""

from nlstop.oracles.models import ValueTable
from nlstop.oracles.values import (
    concave_majorant,
    continuation_intervals,
    entropic_value,
    linear_value,
    oracle_value,
    worst_case_value,
)

__all__ = [
    "ValueTable",
    "concave_majorant",
    "continuation_intervals",
    "entropic_value",
    "linear_value",
    "oracle_value",
    "worst_case_value",
]
