"""Smooth-fit walk over [0, 1] emitting the components of the continuation region."""

from __future__ import annotations

import numpy as np

from nlstop.errors import AssumptionViolationError, DerivativeUnavailableError, InvalidArgumentError
from nlstop.grid import Grid
from nlstop.hfamily.functions import h_eval
from nlstop.hfamily.gain import GainSpec
from nlstop.hfamily.params import HParams
from nlstop.majorant.models import MajorantResult
from nlstop.oracles.models import DEFAULT_TOL_STOP, ValueTable
from nlstop.risk.base import RiskMapping
from nlstop.solver.models import Component, Solution, TangencyPair
from nlstop.solver.tangency import find_tangency_pairs
from nlstop.utils.logging import get_logger
from nlstop.validation.models import CheckReport, CheckResult, CheckStatus

logger = get_logger(__name__)

DEFAULT_DELTA_FACTOR = 10.0
# Pairs within this much of the best h(x) count as maximisers.
TIE_ATOL = 1e-12


def _walk(
    rm: RiskMapping,
    g: GainSpec,
    pairs: list[TangencyPair],
    delta: float,
    tol_stop: float,
) -> list[Component]:
    ys = np.array([p.y for p in pairs])
    zs = np.array([p.z for p in pairs])
    betas = g.evaluate(ys)
    gammas = g.evaluate(zs)

    components: list[Component] = []
    x = 0.0
    while x <= 1.0:
        inside = (ys < x) & (x < zs)
        if np.any(inside):
            p = (zs[inside] - x) / (zs[inside] - ys[inside])
            hv = rm.two_point(p, betas[inside], gammas[inside])
            best = float(np.max(hv))
            if best > float(g(x)) + tol_stop:
                top = hv >= best - TIE_ATOL
                x_minus = float(np.max(ys[inside][top]))
                x_plus = float(np.min(zs[inside][top]))
                hp = HParams(
                    x_minus, x_plus, max(float(g(x_minus)), 0.0), max(float(g(x_plus)), 0.0)
                )
                components.append(Component(x_minus, x_plus, hp))
                logger.info("component_emitted", x=round(x, 6), x_minus=x_minus, x_plus=x_plus)
                x = x_plus
        x += delta
    return components


def solve(
    rm: RiskMapping,
    g: GainSpec,
    grid: Grid,
    delta: float | None = None,
    *,
    tol_stop: float = DEFAULT_TOL_STOP,
    tol_tan: float = 1e-8,
    mesh: int = 200,
    newton_iterations: int = 60,
    min_width_cells: int = 2,
    pairs: list[TangencyPair] | None = None,
    threads: int | None = None,
) -> Solution:
    """Value function and continuation components by the smooth-fit walk.

    ``delta`` defaults to ten grid spacings; it must be shorter than every
    component or components can be skipped. Raises
    :class:`AssumptionViolationError` if an emitted component's h-function
    falls below g.
    """
    if not rm.differentiable:
        raise DerivativeUnavailableError(
            f"smooth fit fails for the '{rm.name}' mapping; "
            "use nlstop.oracles.worst_case_value (nlstop oracle --risk worst-case)"
        )
    if delta is None:
        delta = DEFAULT_DELTA_FACTOR * grid.spacing
    if not delta > 0.0:
        raise InvalidArgumentError(f"delta must be > 0, got {delta!r}")

    gv = g.on_grid(grid)
    if pairs is None:
        pairs = find_tangency_pairs(
            rm,
            g,
            mesh,
            tol_tan=tol_tan,
            newton_iterations=newton_iterations,
            min_width_cells=min_width_cells,
            threads=threads,
        )
    components = _walk(rm, g, pairs, delta, tol_stop)

    values = gv.copy()
    pts = grid.points
    for comp in components:
        idx = np.flatnonzero((pts > comp.x_minus) & (pts < comp.x_plus))
        if idx.size == 0:
            continue
        hv = np.asarray(h_eval(rm, comp.h_params, pts[idx]))
        gap = hv - gv[idx]
        worst = int(np.argmin(gap))
        if gap[worst] < -tol_stop:
            raise AssumptionViolationError(
                f"component ({comp.x_minus:.6g}, {comp.x_plus:.6g}) falls below g at "
                f"x={pts[idx][worst]:.6g} by {-gap[worst]:.3g}; the smooth-fit assumptions "
                "do not hold for these inputs (try a smaller --delta or a finer mesh)"
            )
        values[idx] = hv

    logger.info("solve_done", components=len(components), pairs=len(pairs), delta=delta)
    return Solution(
        value_table=ValueTable(grid, gv, values, tol_stop),
        components=components,
        rm=rm,
        gain=g,
        pairs=pairs,
    )


def cross_check_majorant(
    solution: Solution, majorant: MajorantResult, tol: float = 5e-3
) -> CheckReport:
    """Compare V from the walk with the directly computed majorant w.

    A walk that skipped a component leaves V below w; that is a failure.
    A sup-norm gap above ``tol`` in either direction is a warning.
    """
    table = solution.value_table
    if majorant.grid != table.grid:
        raise InvalidArgumentError(
            f"grids differ: solution has {len(table.grid)} points, majorant {len(majorant.grid)}"
        )
    diff = table.values - majorant.w_values
    worst_low = int(np.argmin(diff))
    sup = float(np.max(np.abs(diff)))
    x_low = float(table.grid.points[worst_low])

    below = CheckResult(
        check_name="value_not_below_majorant",
        status=CheckStatus.PASS if diff[worst_low] >= -tol else CheckStatus.FAIL,
        message=f"min(V - w) = {diff[worst_low]:.3g} at x={x_low:.6g}",
        details={"x": x_low, "gap": float(diff[worst_low]), "tol": tol},
    )
    close = CheckResult(
        check_name="sup_norm",
        status=CheckStatus.PASS if sup <= tol else CheckStatus.WARN,
        message=f"max |V - w| = {sup:.3g} (tol {tol:g})",
        details={"sup_norm": sup, "tol": tol},
    )
    return CheckReport(subject=f"{solution.rm.name} {solution.gain}", results=[below, close])
