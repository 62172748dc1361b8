"""Uniform discretisation of the state space [0, 1]."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from nlstop.errors import InvalidArgumentError

FloatArray = npt.NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class Grid:
    """Uniform partition of [0, 1] including both endpoints."""

    n_points: int
    points: FloatArray = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if self.n_points < 3:
            raise InvalidArgumentError(f"grid needs at least 3 points, got {self.n_points}")
        pts = np.linspace(0.0, 1.0, self.n_points)
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def spacing(self) -> float:
        return 1.0 / (self.n_points - 1)

    def __len__(self) -> int:
        return self.n_points

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Grid) and other.n_points == self.n_points

    def __hash__(self) -> int:
        return hash(self.n_points)

    def interp(self, values: FloatArray, x: float | FloatArray) -> float | FloatArray:
        """Piecewise-linear interpolation of grid ``values`` at ``x``."""
        out = np.interp(x, self.points, values)
        return float(out) if np.ndim(out) == 0 else out


def lipschitz_bound(values: FloatArray, grid: Grid) -> float:
    """Largest absolute slope between neighbouring grid samples."""
    return float(np.max(np.abs(np.diff(values))) / grid.spacing)
