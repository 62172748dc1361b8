"""Evaluation, derivatives and membership for h^{y,z}_{beta,gamma} and the set H."""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

from nlstop.errors import DerivativeUnavailableError, InvalidArgumentError
from nlstop.grid import Grid
from nlstop.hfamily.gain import GainSpec
from nlstop.hfamily.gain import g_bar as compute_g_bar
from nlstop.hfamily.params import HParams
from nlstop.risk.base import RiskMapping

FloatArray = npt.NDArray[np.float64]

FD_STEP = 1e-5
DEFAULT_TOL_DOM = 1e-9
# Interior caps of one-sided members of H, relative to g_bar.
ONE_SIDED_LEVEL = 1.0
PAYOFF_CAP = 2.0


def exit_prob(x: float, y: float, z: float) -> float:
    """P^x(hit y before z) for Brownian motion, i.e. (z - x) / (z - y)."""
    if not y < z:
        raise InvalidArgumentError(f"need y < z, got y={y!r}, z={z!r}")
    if not y <= x <= z:
        raise InvalidArgumentError(f"x={x!r} lies outside [{y!r}, {z!r}]")
    return (z - x) / (z - y)


def _h_values(rm: RiskMapping, hp: HParams, x: FloatArray) -> FloatArray:
    out = np.full(x.shape, np.inf)
    inside = (x > hp.y) & (x < hp.z)
    if np.any(inside):
        p = (hp.z - x[inside]) / hp.width
        out[inside] = rm.two_point(p, hp.beta, hp.gamma)
    out[x == hp.y] = hp.beta
    out[x == hp.z] = hp.gamma
    return out


def h_eval(rm: RiskMapping, hp: HParams, x: float | FloatArray) -> float | FloatArray:
    """h^{y,z}_{beta,gamma}(x); beta at y, gamma at z and +inf outside [y, z]."""
    out = _h_values(rm, hp, np.asarray(x, dtype=np.float64))
    return float(out) if out.ndim == 0 else out


def h_deriv(rm: RiskMapping, hp: HParams, x: float | FloatArray) -> float | FloatArray:
    """Derivative of h in x on [y, z], one-sided at the endpoints.

    Uses the mapping's analytic derivative in the exit probability when it has
    one, otherwise finite differences of step ``FD_STEP``, switching to one-sided
    differences within ``FD_STEP`` of y or z.
    """
    if not rm.differentiable:
        raise DerivativeUnavailableError(
            f"h-functions of the '{rm.name}' mapping are not differentiable"
        )
    x_arr = np.asarray(x, dtype=np.float64)
    if np.any((x_arr < hp.y) | (x_arr > hp.z)):
        raise InvalidArgumentError(f"derivative requested outside [{hp.y!r}, {hp.z!r}]")

    p = (hp.z - x_arr) / hp.width
    analytic = rm.two_point_dp(p, hp.beta, hp.gamma)
    if analytic is not None:
        out = analytic * (-1.0 / hp.width)
    else:
        lo = np.maximum(x_arr - FD_STEP, hp.y)
        hi = np.minimum(x_arr + FD_STEP, hp.z)
        f_lo = _h_values(rm, hp, lo)
        f_hi = _h_values(rm, hp, hi)
        out = (f_hi - f_lo) / (hi - lo)
    return float(out) if out.ndim == 0 else out


def in_H(hp: HParams, g_bar: float) -> bool:  # noqa: N802
    """Membership of the admissible family H for a gain with maximum ``g_bar``."""
    cap = g_bar + PAYOFF_CAP
    level = g_bar + ONE_SIDED_LEVEL
    if not (0.0 <= hp.beta <= cap and 0.0 <= hp.gamma <= cap):
        return False
    if hp.y == 0.0 and hp.z == 1.0:
        return True
    if 0.0 < hp.y < 1.0 and hp.z == 1.0:
        return hp.beta > level
    if hp.y == 0.0 and 0.0 < hp.z < 1.0:
        return hp.gamma > level
    return False


def dominates(
    rm: RiskMapping,
    hp: HParams,
    g: GainSpec,
    grid: Grid,
    tol_dom: float = DEFAULT_TOL_DOM,
) -> bool:
    """True iff h >= g - tol_dom at every grid point."""
    h = _h_values(rm, hp, grid.points)
    return bool(np.all(h >= g.on_grid(grid) - tol_dom))


def linear_dagger_majorant(
    rm: RiskMapping,
    g: GainSpec,
    grid: Grid,
    res: int = 64,
    tol_dom: float = DEFAULT_TOL_DOM,
) -> FloatArray:
    """Infimum of dominating full-interval functions h^{0,1}_{beta,gamma}, no caps.

    For expectation this is the line through the best chord; for the
    worst-case mapping it collapses to the constant max g, which is why the
    one-sided members of H are needed.
    """
    gv = g.on_grid(grid)
    top = compute_g_bar(g, grid)
    # Custom mappings are inverted by bisection, which needs a finite range.
    upper = np.inf if rm.inverse is not None else 2.0 * (top + PAYOFF_CAP)
    betas = np.union1d(np.linspace(0.0, top, res), [gv[0], top])
    p = 1.0 - grid.points

    gammas = np.max(
        rm.second_payoff_inverse(p[None, :], betas[:, None], gv[None, :] - tol_dom, upper),
        axis=1,
    )
    feasible = np.isfinite(gammas)
    if not np.any(feasible):
        return np.full(len(grid), top)
    h = rm.two_point(p[None, :], betas[feasible, None], gammas[feasible, None])
    h[:, 0] = betas[feasible]
    h[:, -1] = gammas[feasible]
    return np.min(h, axis=0)
