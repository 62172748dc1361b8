"""Smooth-fit solver: tangency search, the component walk and the extension to H."""

from nlstop.solver.algorithm import cross_check_majorant, solve
from nlstop.solver.extension import extend_to_H
from nlstop.solver.models import Component, Solution, TangencyPair
from nlstop.solver.tangency import find_tangency_pairs, tangency_residuals

__all__ = [
    "Component",
    "Solution",
    "TangencyPair",
    "cross_check_majorant",
    "extend_to_H",
    "find_tangency_pairs",
    "solve",
    "tangency_residuals",
]
