"""Risk mappings as law-invariant reference mappings on finite laws.

A mapping is evaluated only through the law of its argument, so the Markov
reference-mapping form and law invariance hold by construction. Correctness
of the solver for a custom mapping is conditional on that mapping being
time consistent; the library does not check it.
"""

from __future__ import annotations

from collections.abc import Callable
from dataclasses import dataclass, field
from enum import Enum

import numpy as np
import numpy.typing as npt

from nlstop.errors import DerivativeUnavailableError
from nlstop.risk.laws import DiscreteLaw, TwoPointLaw

FloatArray = npt.NDArray[np.float64]
ArrayLike = float | FloatArray

# (values, probabilities) -> value, reducing over the last axis.
Kernel = Callable[[FloatArray, FloatArray], FloatArray]
# (p, v_first, v_second) -> d/dp of the two-point value.
TwoPointDerivative = Callable[[FloatArray, FloatArray, FloatArray], FloatArray]
# (p, v_first, target) -> smallest v_second reaching target (+inf if none).
SecondPayoffInverse = Callable[[FloatArray, FloatArray, FloatArray], FloatArray]

INVERSE_BISECTION_STEPS = 80


class RiskKind(str, Enum):
    LINEAR = "linear"
    ENTROPIC = "entropic"
    WORST_CASE = "worst-case"
    CUSTOM = "custom"


@dataclass(frozen=True)
class RiskMapping:
    """Immutable reference mapping; safe to share between threads."""

    kind: RiskKind
    name: str
    evaluate: Callable[[DiscreteLaw], float] = field(repr=False)
    kernel: Kernel | None = field(default=None, repr=False, compare=False)
    dp: TwoPointDerivative | None = field(default=None, repr=False, compare=False)
    inverse: SecondPayoffInverse | None = field(default=None, repr=False, compare=False)
    differentiable: bool = True

    @classmethod
    def custom(
        cls,
        evaluate: Callable[[DiscreteLaw], float],
        *,
        name: str = "custom",
        differentiable: bool = True,
        dp: TwoPointDerivative | None = None,
    ) -> RiskMapping:
        """Wrap a user function on discrete laws.

        Two-point values go through ``evaluate`` one law at a time. Without
        ``dp`` the h-derivatives fall back to finite differences.
        """
        return cls(
            kind=RiskKind.CUSTOM,
            name=name,
            evaluate=evaluate,
            dp=dp,
            differentiable=differentiable,
        )

    def two_point(self, p: ArrayLike, v_first: ArrayLike, v_second: ArrayLike) -> FloatArray:
        """Vectorised value of the law ``v_first`` w.p. ``p``, else ``v_second``."""
        p_arr, a_arr, b_arr = np.broadcast_arrays(
            np.asarray(p, dtype=np.float64),
            np.asarray(v_first, dtype=np.float64),
            np.asarray(v_second, dtype=np.float64),
        )
        if self.kernel is not None:
            values = np.stack([a_arr, b_arr], axis=-1)
            probs = np.stack([p_arr, 1.0 - p_arr], axis=-1)
            return np.asarray(self.kernel(values, probs), dtype=np.float64)
        out = np.empty(p_arr.shape, dtype=np.float64)
        for idx in np.ndindex(p_arr.shape):
            law = TwoPointLaw(float(p_arr[idx]), float(a_arr[idx]), float(b_arr[idx]))
            out[idx] = self.evaluate(law.to_discrete())
        return out

    def two_point_dp(
        self, p: ArrayLike, v_first: ArrayLike, v_second: ArrayLike
    ) -> FloatArray | None:
        """Analytic d/dp of the two-point value, or None when only differences are available."""
        if not self.differentiable:
            raise DerivativeUnavailableError(
                f"risk mapping '{self.name}' has no derivative in the exit probability"
            )
        if self.dp is None:
            return None
        p_arr, a_arr, b_arr = np.broadcast_arrays(
            np.asarray(p, dtype=np.float64),
            np.asarray(v_first, dtype=np.float64),
            np.asarray(v_second, dtype=np.float64),
        )
        return np.asarray(self.dp(p_arr, a_arr, b_arr), dtype=np.float64)

    def second_payoff_inverse(
        self,
        p: ArrayLike,
        v_first: ArrayLike,
        target: ArrayLike,
        upper: float,
    ) -> FloatArray:
        """Smallest ``v_second`` in [0, upper] with two-point value >= target.

        Returns +inf where no payoff in the range reaches the target.
        """
        p_arr, a_arr, t_arr = np.broadcast_arrays(
            np.asarray(p, dtype=np.float64),
            np.asarray(v_first, dtype=np.float64),
            np.asarray(target, dtype=np.float64),
        )
        if self.inverse is not None:
            raw = np.asarray(self.inverse(p_arr, a_arr, t_arr), dtype=np.float64)
            out = np.maximum(raw, 0.0)
            out[out > upper] = np.inf
            return out
        return self._bisect_inverse(p_arr, a_arr, t_arr, upper)

    def _bisect_inverse(
        self, p: FloatArray, a: FloatArray, target: FloatArray, upper: float
    ) -> FloatArray:
        lo = np.zeros(p.shape)
        hi = np.full(p.shape, upper)
        at_zero = self.two_point(p, a, lo) >= target
        reachable = self.two_point(p, a, hi) >= target
        for _ in range(INVERSE_BISECTION_STEPS):
            mid = 0.5 * (lo + hi)
            ok = self.two_point(p, a, mid) >= target
            hi = np.where(ok, mid, hi)
            lo = np.where(ok, lo, mid)
        out = np.where(at_zero, 0.0, hi)
        return np.where(reachable, out, np.inf)


def eval_two_point(rm: RiskMapping, law: TwoPointLaw) -> float:
    """Value of a two-point exit law under ``rm``."""
    return float(rm.two_point(law.p_first, law.v_first, law.v_second))


def eval_discrete(rm: RiskMapping, law: DiscreteLaw) -> float:
    """Value of a finite law under ``rm``.

    Built-ins share their kernel with :func:`eval_two_point`, so the two
    agree exactly on two-point support.
    """
    if rm.kernel is not None:
        return float(rm.kernel(law.outcomes, law.probabilities))
    return float(rm.evaluate(law))
