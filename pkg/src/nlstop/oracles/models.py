"""Value tables on a grid."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from nlstop.grid import Grid

FloatArray = npt.NDArray[np.float64]
BoolArray = npt.NDArray[np.bool_]

DEFAULT_TOL_STOP = 1e-9


@dataclass(frozen=True, eq=False)
class ValueTable:
    """V sampled on a grid together with g and the stopping set S = {V = g}."""

    grid: Grid
    g_values: FloatArray
    values: FloatArray
    tol_stop: float = DEFAULT_TOL_STOP
    stopping_mask: BoolArray = field(init=False)

    def __post_init__(self) -> None:
        mask = np.abs(self.values - self.g_values) <= self.tol_stop
        object.__setattr__(self, "stopping_mask", mask)

    def value_at(self, x: float | FloatArray) -> float | FloatArray:
        return self.grid.interp(self.values, x)

    def continuation_intervals(self) -> list[tuple[float, float]]:
        """Maximal runs of continuation points, bracketed by the adjacent stopping points."""
        pts = self.grid.points
        cont = ~self.stopping_mask
        # Run boundaries from the sign changes of the padded indicator.
        padded = np.concatenate([[False], cont, [False]]).astype(np.int8)
        edges = np.flatnonzero(np.diff(padded))
        out = []
        for start, stop in zip(edges[::2], edges[1::2], strict=True):
            left = pts[max(start - 1, 0)]
            right = pts[min(stop, len(pts) - 1)]
            out.append((float(left), float(right)))
        return out
