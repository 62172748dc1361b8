"""Parameters (y, z, beta, gamma) of an h-function."""

from __future__ import annotations

import math
from dataclasses import dataclass

from nlstop.errors import InvalidArgumentError


@dataclass(frozen=True, order=True)
class HParams:
    """Domain [y, z] and boundary payoffs of h^{y,z}_{beta,gamma}.

    Field order makes the natural ordering lexicographic in (y, z, beta, gamma).
    """

    y: float
    z: float
    beta: float
    gamma: float

    def __post_init__(self) -> None:
        if not (0.0 <= self.y < self.z <= 1.0):
            raise InvalidArgumentError(
                f"need 0 <= y < z <= 1, got y={self.y!r}, z={self.z!r}"
            )
        for name in ("beta", "gamma"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0.0:
                raise InvalidArgumentError(f"{name} must be finite and >= 0, got {value!r}")

    @property
    def width(self) -> float:
        return self.z - self.y

    def to_dict(self) -> dict[str, float]:
        return {"y": self.y, "z": self.z, "beta": self.beta, "gamma": self.gamma}
