"""Closed-form value functions for the built-in mappings."""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

from nlstop.errors import UnsupportedOperationError
from nlstop.grid import Grid
from nlstop.hfamily.gain import GainSpec
from nlstop.oracles.hull import lower_envelope, upper_envelope
from nlstop.oracles.models import DEFAULT_TOL_STOP, ValueTable
from nlstop.risk.base import RiskKind, RiskMapping
from nlstop.utils.logging import get_logger

logger = get_logger(__name__)

FloatArray = npt.NDArray[np.float64]


def concave_majorant(samples: FloatArray) -> FloatArray:
    """Smallest concave majorant of samples taken on a uniform grid of [0, 1]."""
    y = np.asarray(samples, dtype=np.float64)
    x = np.linspace(0.0, 1.0, y.size)
    return upper_envelope(x, y)


def linear_value(g: GainSpec, grid: Grid, tol_stop: float = DEFAULT_TOL_STOP) -> ValueTable:
    """Value under expectation: the concave majorant of g."""
    gv = g.on_grid(grid)
    return ValueTable(grid, gv, upper_envelope(grid.points, gv), tol_stop)


def worst_case_value(
    g: GainSpec, grid: Grid, tol_stop: float = DEFAULT_TOL_STOP
) -> ValueTable:
    """Value under the worst-case mapping: min of the left and right running maxima of g."""
    gv = g.on_grid(grid)
    left = np.maximum.accumulate(gv)
    right = np.maximum.accumulate(gv[::-1])[::-1]
    return ValueTable(grid, gv, np.minimum(left, right), tol_stop)


def entropic_value(g: GainSpec, grid: Grid, tol_stop: float = DEFAULT_TOL_STOP) -> ValueTable:
    """Value under the entropic mapping: -ln of the greatest convex minorant of exp(-g).

    exp(-g) is taken relative to min g so gains of large magnitude do not
    underflow.
    """
    gv = g.on_grid(grid)
    shift = float(np.min(gv))
    f = np.exp(-(gv - shift))
    minorant = lower_envelope(grid.points, f)
    values = np.maximum(shift - np.log(minorant), gv)
    return ValueTable(grid, gv, values, tol_stop)


def oracle_value(
    rm: RiskMapping, g: GainSpec, grid: Grid, tol_stop: float = DEFAULT_TOL_STOP
) -> ValueTable:
    """Closed-form value for a built-in mapping."""
    logger.debug("oracle_value", risk=rm.name, gain=str(g), n_points=len(grid))
    if rm.kind is RiskKind.LINEAR:
        return linear_value(g, grid, tol_stop)
    if rm.kind is RiskKind.ENTROPIC:
        return entropic_value(g, grid, tol_stop)
    if rm.kind is RiskKind.WORST_CASE:
        return worst_case_value(g, grid, tol_stop)
    raise UnsupportedOperationError(f"no closed form for risk mapping '{rm.name}'")


def continuation_intervals(table: ValueTable) -> list[tuple[float, float]]:
    return table.continuation_intervals()
