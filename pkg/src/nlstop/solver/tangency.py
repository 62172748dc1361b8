"""Search for tangency pairs (y, z) of the smooth-fit conditions.

A pair qualifies when h = h^{y,z}_{g(y),g(z)} satisfies

    y (h'(y+) - g'(y)) = 0   and   (1 - z) (h'(z-) - g'(z)) = 0,

so y = 0 and z = 1 satisfy their condition identically.
"""

from __future__ import annotations

import numpy as np
import numpy.typing as npt
from scipy.optimize import brentq

from nlstop.errors import DerivativeUnavailableError
from nlstop.hfamily.functions import FD_STEP
from nlstop.hfamily.gain import GainSpec
from nlstop.risk.base import RiskMapping
from nlstop.solver.models import TangencyPair
from nlstop.utils.logging import get_logger
from nlstop.utils.parallel import ordered_map

logger = get_logger(__name__)

FloatArray = npt.NDArray[np.float64]

JACOBIAN_STEP = 1e-7
MIN_DAMPING = 1e-6
DEDUP_DECIMALS = 9
# brentq refuses anything below 4 * machine epsilon.
ROOT_RTOL = 4 * float(np.finfo(np.float64).eps)


def _endpoint_slopes(
    rm: RiskMapping, y: FloatArray, z: FloatArray, beta: FloatArray, gamma: FloatArray
) -> tuple[FloatArray, FloatArray]:
    """h'(y+) and h'(z-) for h^{y,z}_{beta,gamma}."""
    width = z - y
    dp_left = rm.two_point_dp(np.ones_like(y), beta, gamma)
    if dp_left is not None:
        dp_right = rm.two_point_dp(np.zeros_like(y), beta, gamma)
        assert dp_right is not None
        return -dp_left / width, -dp_right / width
    s = np.minimum(FD_STEP, 0.5 * width)
    left = (rm.two_point(1.0 - s / width, beta, gamma) - beta) / s
    right = (gamma - rm.two_point(s / width, beta, gamma)) / s
    return left, right


def tangency_residuals(
    rm: RiskMapping, g: GainSpec, y: float | FloatArray, z: float | FloatArray
) -> tuple[FloatArray, FloatArray]:
    """Residual vector of the smooth-fit conditions, vectorised over (y, z)."""
    y_arr, z_arr = np.broadcast_arrays(
        np.asarray(y, dtype=np.float64), np.asarray(z, dtype=np.float64)
    )
    beta = g.evaluate(y_arr)
    gamma = g.evaluate(z_arr)
    left, right = _endpoint_slopes(rm, y_arr, z_arr, beta, gamma)
    return (
        y_arr * (left - np.asarray(g.derivative(y_arr))),
        (1.0 - z_arr) * (right - np.asarray(g.derivative(z_arr))),
    )


def _residual(rm: RiskMapping, g: GainSpec, point: FloatArray) -> FloatArray:
    r1, r2 = tangency_residuals(rm, g, point[0], point[1])
    return np.array([float(r1), float(r2)])


def _clamp(point: FloatArray) -> FloatArray:
    return np.clip(point, 0.0, 1.0)


def _newton(
    rm: RiskMapping,
    g: GainSpec,
    start: FloatArray,
    iterations: int,
    tol_tan: float,
    min_width: float,
) -> TangencyPair | None:
    """Damped Newton iteration on the residual with a forward-difference Jacobian."""
    x = _clamp(start)
    r = _residual(rm, g, x)
    for _ in range(iterations):
        if np.max(np.abs(r)) <= tol_tan * 1e-3:
            break
        jac = np.empty((2, 2))
        for col in range(2):
            # Step into the domain so the perturbed pair stays valid.
            h = -JACOBIAN_STEP if x[col] + JACOBIAN_STEP > 1.0 else JACOBIAN_STEP
            shifted = x.copy()
            shifted[col] += h
            jac[:, col] = (_residual(rm, g, shifted) - r) / h
        try:
            step = np.linalg.solve(jac, r)
        except np.linalg.LinAlgError:
            break
        damping = 1.0
        norm = np.linalg.norm(r)
        while damping >= MIN_DAMPING:
            trial = _clamp(x - damping * step)
            if trial[1] - trial[0] >= min_width:
                r_trial = _residual(rm, g, trial)
                if np.linalg.norm(r_trial) < norm:
                    x, r = trial, r_trial
                    break
            damping *= 0.5
        else:
            break
    if x[1] - x[0] < min_width or np.max(np.abs(r)) > tol_tan:
        return None
    return TangencyPair(float(x[0]), float(x[1]), float(r[0]), float(r[1]))


def _boundary_roots(
    rm: RiskMapping,
    g: GainSpec,
    nodes: FloatArray,
    residual: str,
    tol_tan: float,
) -> list[TangencyPair]:
    """Pairs on the y = 0 (``residual='right'``) or z = 1 (``'left'``) edge."""

    def f(t: float) -> float:
        if residual == "right":
            return float(tangency_residuals(rm, g, 0.0, t)[1])
        return float(tangency_residuals(rm, g, t, 1.0)[0])

    def pair(t: float) -> TangencyPair:
        if residual == "right":
            return TangencyPair(0.0, t, 0.0, f(t))
        return TangencyPair(t, 1.0, f(t), 0.0)

    values = np.array([f(t) for t in nodes])
    found = [pair(float(t)) for t, v in zip(nodes, values, strict=True) if abs(v) <= tol_tan]
    for k in np.flatnonzero(values[:-1] * values[1:] < 0.0):
        root = brentq(f, nodes[k], nodes[k + 1], xtol=1e-15, rtol=ROOT_RTOL, maxiter=200)
        candidate = pair(float(root))
        if candidate.max_residual <= tol_tan:
            found.append(candidate)
    return found


def _dedup(pairs: list[TangencyPair]) -> list[TangencyPair]:
    seen: dict[tuple[float, float], TangencyPair] = {}
    for p in sorted(pairs):
        key = (round(p.y, DEDUP_DECIMALS), round(p.z, DEDUP_DECIMALS))
        if key not in seen or p.max_residual < seen[key].max_residual:
            seen[key] = p
    return sorted(seen.values())


def find_tangency_pairs(
    rm: RiskMapping,
    g: GainSpec,
    mesh: int = 200,
    *,
    tol_tan: float = 1e-8,
    newton_iterations: int = 60,
    min_width_cells: int = 2,
    threads: int | None = None,
) -> list[TangencyPair]:
    """All tangency pairs found by a mesh scan plus Newton refinement, sorted by (y, z).

    The trivial pair (0, 1) is always included.
    """
    if not rm.differentiable:
        raise DerivativeUnavailableError(
            f"smooth fit needs derivatives, which the '{rm.name}' mapping lacks; "
            "use the closed-form worst-case value instead"
        )
    if not g.derivative_available:
        raise DerivativeUnavailableError(f"gain '{g}' has no analytic derivative")

    nodes = np.linspace(0.0, 1.0, mesh + 1)
    min_width = min_width_cells / mesh
    yy, zz = np.meshgrid(nodes, nodes, indexing="ij")
    valid = zz > yy
    r1 = np.zeros(yy.shape)
    r2 = np.zeros(yy.shape)
    r1[valid], r2[valid] = tangency_residuals(rm, g, yy[valid], zz[valid])

    # Corner stacks of every cell (i, j) = [y_i, y_i+1] x [z_j, z_j+1].
    def corners(r: FloatArray) -> FloatArray:
        return np.stack([r[:-1, :-1], r[1:, :-1], r[:-1, 1:], r[1:, 1:]])

    i_idx, j_idx = np.meshgrid(np.arange(mesh), np.arange(mesh), indexing="ij")
    away = (j_idx - (i_idx + 1)) >= min_width_cells
    c1, c2 = corners(r1), corners(r2)
    # Cells touching the invalid half are masked out by `away`.
    flips = (
        away
        & (np.min(c1, axis=0) <= 0.0)
        & (np.max(c1, axis=0) >= 0.0)
        & (np.min(c2, axis=0) <= 0.0)
        & (np.max(c2, axis=0) >= 0.0)
    )
    starts = [
        np.array([0.5 * (nodes[i] + nodes[i + 1]), 0.5 * (nodes[j] + nodes[j + 1])])
        for i, j in zip(*np.nonzero(flips), strict=True)
    ]
    logger.debug("tangency_cells", mesh=mesh, cells=len(starts))

    refined = ordered_map(
        lambda s: _newton(rm, g, s, newton_iterations, tol_tan, min_width), starts, threads
    )
    pairs = [p for p in refined if p is not None]
    pairs.append(TangencyPair(0.0, 1.0, 0.0, 0.0))
    inner = nodes[(nodes >= min_width) & (nodes <= 1.0 - 1.0 / mesh)]
    pairs += _boundary_roots(rm, g, inner, "right", tol_tan)
    inner = nodes[(nodes >= 1.0 / mesh) & (nodes <= 1.0 - min_width)]
    pairs += _boundary_roots(rm, g, inner, "left", tol_tan)

    result = _dedup(pairs)
    logger.info("tangency_pairs_found", count=len(result), cells=len(starts))
    return result
