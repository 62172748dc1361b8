"""Solver data types: tangency pairs, continuation components and solutions."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from nlstop.hfamily.functions import h_eval
from nlstop.hfamily.gain import GainSpec
from nlstop.hfamily.params import HParams
from nlstop.oracles.models import ValueTable
from nlstop.risk.base import RiskMapping

FloatArray = npt.NDArray[np.float64]


@dataclass(frozen=True, order=True)
class TangencyPair:
    """(y, z) whose h^{y,z}_{g(y),g(z)} meets g tangentially at every interior end."""

    y: float
    z: float
    residual_left: float = field(compare=False)
    residual_right: float = field(compare=False)

    @property
    def max_residual(self) -> float:
        return max(abs(self.residual_left), abs(self.residual_right))


@dataclass(frozen=True)
class Component:
    """A connected component (x_minus, x_plus) of the continuation region."""

    x_minus: float
    x_plus: float
    h_params: HParams

    def contains(self, x: float) -> bool:
        return self.x_minus < x < self.x_plus

    def to_dict(self) -> dict[str, float]:
        return {
            "x_minus": self.x_minus,
            "x_plus": self.x_plus,
            "beta": self.h_params.beta,
            "gamma": self.h_params.gamma,
        }


@dataclass(frozen=True, eq=False)
class Solution:
    value_table: ValueTable
    components: list[Component]
    rm: RiskMapping = field(repr=False)
    gain: GainSpec
    pairs: list[TangencyPair] = field(default_factory=list, repr=False)
    mode: str = "smooth_fit"

    def value_at(self, x: float) -> float:
        """V(x) from the component h-functions, g elsewhere."""
        for comp in self.components:
            if comp.contains(x):
                return float(h_eval(self.rm, comp.h_params, x))
        return float(self.gain(x))

    @property
    def intervals(self) -> list[tuple[float, float]]:
        return [(c.x_minus, c.x_plus) for c in self.components]
