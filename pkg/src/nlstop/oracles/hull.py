"""Monotone-chain hulls of sampled functions and the envelopes they induce."""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

FloatArray = npt.NDArray[np.float64]


def _cross(xo: float, yo: float, xa: float, ya: float, xb: float, yb: float) -> float:
    """z-component of OA x OB; positive for a counter-clockwise turn."""
    return (xa - xo) * (yb - yo) - (ya - yo) * (xb - xo)


def _chain(x: FloatArray, y: FloatArray, upper: bool) -> list[int]:
    # x must be strictly increasing; collinear interior points are dropped.
    hull: list[int] = []
    for i in range(len(x)):
        while len(hull) >= 2:
            o, a = hull[-2], hull[-1]
            turn = _cross(x[o], y[o], x[a], y[a], x[i], y[i])
            if (upper and turn >= 0.0) or (not upper and turn <= 0.0):
                hull.pop()
            else:
                break
        hull.append(i)
    return hull


def upper_hull(x: FloatArray, y: FloatArray) -> list[int]:
    """Indices of the upper hull vertices, left to right. Endpoints are always vertices."""
    return _chain(np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64), upper=True)


def lower_hull(x: FloatArray, y: FloatArray) -> list[int]:
    """Indices of the lower hull vertices, left to right."""
    return _chain(np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64), upper=False)


def upper_envelope(x: FloatArray, y: FloatArray) -> FloatArray:
    """Smallest concave function above the samples, evaluated at ``x``."""
    idx = upper_hull(x, y)
    env = np.interp(x, x[idx], y[idx])
    return np.maximum(env, y)


def lower_envelope(x: FloatArray, y: FloatArray) -> FloatArray:
    """Greatest convex function below the samples, evaluated at ``x``."""
    idx = lower_hull(x, y)
    env = np.interp(x, x[idx], y[idx])
    return np.minimum(env, y)
