"""The h-function family and gain specifications."""

from nlstop.hfamily.functions import (
    dominates,
    exit_prob,
    h_deriv,
    h_eval,
    in_H,
    linear_dagger_majorant,
)
from nlstop.hfamily.gain import GainKind, GainSpec, g_bar, parse_gain
from nlstop.hfamily.params import HParams

__all__ = [
    "GainKind",
    "GainSpec",
    "HParams",
    "dominates",
    "exit_prob",
    "g_bar",
    "h_deriv",
    "h_eval",
    "in_H",
    "linear_dagger_majorant",
    "parse_gain",
]
