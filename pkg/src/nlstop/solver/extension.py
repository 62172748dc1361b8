"""Extension of a component's h-function to a member of H.

The function h^{x-,x+}_{g(x-),g(x+)} is widened step by step: each step
moves the free endpoint by ``delta_ext`` and picks the payoff there so the
new function still passes through the previous endpoint value, which keeps
it unchanged on [x-, x+]. Steps stop at the boundary or once the payoff
exceeds g_bar + 1. A payoff that would have to exceed g_bar + 2 is handled by
truncating the domain where the function reaches g_bar + 2.
"""

from __future__ import annotations

from collections.abc import Callable

from scipy.optimize import brentq

from nlstop.errors import ExtensionError, NoRootError
from nlstop.grid import Grid
from nlstop.hfamily.functions import ONE_SIDED_LEVEL, PAYOFF_CAP, h_eval, in_H
from nlstop.hfamily.gain import GainSpec, g_bar
from nlstop.hfamily.params import HParams
from nlstop.risk.base import RiskMapping
from nlstop.solver.models import Component
from nlstop.utils.logging import get_logger

logger = get_logger(__name__)

ROOT_XTOL = 1e-12
G_BAR_GRID_POINTS = 2001


def _extend(
    rm: RiskMapping,
    make: Callable[[float, float], HParams],
    start: float,
    start_value: float,
    step: float,
    cap: float,
    level: float,
    side: str,
) -> tuple[float, float]:
    """Walk the free endpoint from ``start`` in steps of ``step`` (signed).

    ``make(position, payoff)`` builds the h-parameters with the free endpoint
    at ``position`` carrying ``payoff``. Returns the final (position, payoff).
    """
    boundary = 1.0 if step > 0 else 0.0
    prev, prev_value = start, start_value
    n = 0
    while prev != boundary and not (n > 0 and prev_value > level):
        n += 1
        pos = min(start + n * step, 1.0) if step > 0 else max(start + n * step, 0.0)

        def mismatch(v: float, pos: float = pos, prev: float = prev) -> float:
            return float(h_eval(rm, make(pos, v), prev)) - prev_value

        low, high = mismatch(0.0), mismatch(cap)
        if low > 0.0:
            raise NoRootError(
                f"{side} extension step {n}: even a zero payoff at {pos:.6g} overshoots "
                f"{prev_value:.6g} at {prev:.6g}; retry with a smaller delta_ext"
            )
        if high < 0.0:
            # The payoff would pass g_bar + 2 inside this step: truncate there.
            def reach(q: float, prev: float = prev) -> float:
                return float(h_eval(rm, make(q, cap), prev)) - prev_value

            lo, hi = (prev, pos) if step > 0 else (pos, prev)
            q = brentq(reach, lo, hi, xtol=ROOT_XTOL)
            logger.info("extension_truncated", side=side, position=q, payoff=cap)
            return q, cap

        value = brentq(mismatch, 0.0, cap, xtol=ROOT_XTOL)
        logger.debug("extension_step", side=side, position=pos, payoff=value)
        prev, prev_value = pos, value
    return prev, prev_value


def extend_to_H(  # noqa: N802
    rm: RiskMapping,
    g: GainSpec,
    comp: Component,
    delta_ext: float = 0.05,
    *,
    grid: Grid | None = None,
) -> HParams:
    """Parameters in H agreeing with the component's h-function on [x-, x+]."""
    hp = comp.h_params
    if hp.y == 0.0 and hp.z == 1.0:
        return hp

    top = g_bar(g, grid or Grid(G_BAR_GRID_POINTS))
    cap = top + PAYOFF_CAP
    level = top + ONE_SIDED_LEVEL

    z, gamma = _extend(
        rm,
        lambda pos, v: HParams(hp.y, pos, hp.beta, v),
        hp.z,
        hp.gamma,
        delta_ext,
        cap,
        level,
        "right",
    )
    y, beta = _extend(
        rm,
        lambda pos, v: HParams(pos, z, v, gamma),
        hp.y,
        hp.beta,
        -delta_ext,
        cap,
        level,
        "left",
    )
    result = HParams(y, z, beta, gamma)
    if not in_H(result, top):
        raise ExtensionError(
            f"extension of ({comp.x_minus:.6g}, {comp.x_plus:.6g}) ended at {result}, "
            f"outside H for g_bar={top:.6g}"
        )
    logger.info("extension_done", **result.to_dict())
    return result
