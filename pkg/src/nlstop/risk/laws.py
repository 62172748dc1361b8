"""Finitely supported probability laws evaluated by risk mappings."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from nlstop.errors import InvalidArgumentError

FloatArray = npt.NDArray[np.float64]

PROB_SUM_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class DiscreteLaw:
    """A law on the real line with finitely many atoms."""

    outcomes: FloatArray
    probabilities: FloatArray

    def __post_init__(self) -> None:
        outcomes = np.asarray(self.outcomes, dtype=np.float64).reshape(-1)
        probs = np.asarray(self.probabilities, dtype=np.float64).reshape(-1)
        if outcomes.size == 0:
            raise InvalidArgumentError("law has no outcomes")
        if outcomes.shape != probs.shape:
            raise InvalidArgumentError(
                f"outcomes ({outcomes.size}) and probabilities ({probs.size}) differ in length"
            )
        if not np.all(np.isfinite(outcomes)):
            raise InvalidArgumentError(f"non-finite outcome in {outcomes.tolist()}")
        if np.any(probs < 0) or not np.all(np.isfinite(probs)):
            raise InvalidArgumentError(f"invalid probabilities {probs.tolist()}")
        total = float(probs.sum())
        if abs(total - 1.0) > PROB_SUM_TOL:
            raise InvalidArgumentError(f"probabilities sum to {total!r}, not 1")
        outcomes.setflags(write=False)
        probs.setflags(write=False)
        object.__setattr__(self, "outcomes", outcomes)
        object.__setattr__(self, "probabilities", probs)

    @classmethod
    def point_mass(cls, value: float) -> DiscreteLaw:
        return cls(np.array([value]), np.array([1.0]))

    @classmethod
    def empirical(cls, samples: npt.ArrayLike) -> DiscreteLaw:
        """Empirical law of ``samples``; atoms are sorted so sample order never matters."""
        values, counts = np.unique(np.asarray(samples, dtype=np.float64), return_counts=True)
        if values.size == 0:
            raise InvalidArgumentError("cannot form the empirical law of zero samples")
        return cls(values, counts / counts.sum())

    def shifted(self, c: float) -> DiscreteLaw:
        return DiscreteLaw(self.outcomes + c, self.probabilities)

    def __len__(self) -> int:
        return int(self.outcomes.size)

    def to_dict(self) -> dict[str, list[float]]:
        return {
            "outcomes": self.outcomes.tolist(),
            "probabilities": self.probabilities.tolist(),
        }


@dataclass(frozen=True)
class TwoPointLaw:
    """Law of ``v_first`` with probability ``p_first``, ``v_second`` otherwise.

    This is the exit law seen from x in (y, z): ``v_first`` is paid on hitting
    y before z.
    """

    p_first: float
    v_first: float
    v_second: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.p_first <= 1.0:
            raise InvalidArgumentError(f"p_first must lie in [0, 1], got {self.p_first!r}")
        if not (np.isfinite(self.v_first) and np.isfinite(self.v_second)):
            raise InvalidArgumentError(
                f"two-point outcomes must be finite, got {self.v_first!r}, {self.v_second!r}"
            )

    def to_discrete(self) -> DiscreteLaw:
        p = self.p_first
        return DiscreteLaw(np.array([self.v_first, self.v_second]), np.array([p, 1.0 - p]))
