"""Result of the direct majorant search."""

from __future__ import annotations

from dataclasses import dataclass
from enum import IntEnum

import numpy as np
import numpy.typing as npt

from nlstop.grid import Grid
from nlstop.hfamily.params import HParams

FloatArray = npt.NDArray[np.float64]
IntArray = npt.NDArray[np.int8]


class Family(IntEnum):
    """Parameter classes of H."""

    FULL = 0  # y = 0, z = 1
    RIGHT_ANCHORED = 1  # y interior, z = 1, beta > g_bar + 1
    LEFT_ANCHORED = 2  # y = 0, z interior, gamma > g_bar + 1


@dataclass(frozen=True, eq=False)
class MajorantResult:
    """w on a grid with the minimising parameters at each grid point."""

    grid: Grid
    g_values: FloatArray
    w_values: FloatArray
    y: FloatArray
    z: FloatArray
    beta: FloatArray
    gamma: FloatArray
    family: IntArray
    g_bar: float

    @property
    def argmin_params(self) -> list[HParams]:
        return [
            HParams(float(y), float(z), float(b), float(c))
            for y, z, b, c in zip(self.y, self.z, self.beta, self.gamma, strict=True)
        ]

    def value_at(self, x: float | FloatArray) -> float | FloatArray:
        return self.grid.interp(self.w_values, x)
