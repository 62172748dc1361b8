"""The three built-in risk mappings: linear, entropic and worst-case."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np

from nlstop.risk.base import FloatArray, Kernel, RiskKind, RiskMapping
from nlstop.risk.laws import DiscreteLaw

# Atoms at or below this mass are ignored by the essential infimum.
SUPPORT_THRESHOLD = 1e-12


def _linear_kernel(values: FloatArray, probs: FloatArray) -> FloatArray:
    return np.sum(probs * values, axis=-1)


def _charged_min(values: FloatArray, probs: FloatArray) -> FloatArray:
    # zero-mass atoms must not set the log-sum-exp shift
    return np.min(np.where(probs > 0.0, values, np.inf), axis=-1, keepdims=True)


def _entropic_kernel(values: FloatArray, probs: FloatArray) -> FloatArray:
    m = _charged_min(values, probs)
    with np.errstate(over="ignore", invalid="ignore"):
        terms = np.where(probs > 0.0, probs * np.exp(-(values - m)), 0.0)
    return m[..., 0] - np.log(np.sum(terms, axis=-1))


def _worst_case_kernel(values: FloatArray, probs: FloatArray) -> FloatArray:
    return np.min(np.where(probs > SUPPORT_THRESHOLD, values, np.inf), axis=-1)


def _linear_dp(p: FloatArray, a: FloatArray, b: FloatArray) -> FloatArray:
    return a - b


def _entropic_dp(p: FloatArray, a: FloatArray, b: FloatArray) -> FloatArray:
    q = 1.0 - p
    m = np.where(p <= 0.0, b, np.where(q <= 0.0, a, np.minimum(a, b)))
    with np.errstate(over="ignore", invalid="ignore"):
        ea = np.exp(-(a - m))
        eb = np.exp(-(b - m))
        mass = np.where(p > 0.0, p * ea, 0.0) + np.where(q > 0.0, q * eb, 0.0)
        return -(ea - eb) / mass


def _linear_inverse(p: FloatArray, a: FloatArray, t: FloatArray) -> FloatArray:
    q = 1.0 - p
    with np.errstate(divide="ignore", invalid="ignore"):
        interior = (t - p * a) / q
    at_first = np.where(a >= t, -np.inf, np.inf)
    return np.where(q > 0.0, interior, at_first)


def _entropic_inverse(p: FloatArray, a: FloatArray, t: FloatArray) -> FloatArray:
    q = 1.0 - p
    m = np.minimum(a, t)
    with np.errstate(divide="ignore", invalid="ignore"):
        rhs = (np.exp(-(t - m)) - p * np.exp(-(a - m))) / q
        interior = np.where(rhs > 0.0, m - np.log(rhs), np.inf)
    at_first = np.where(a >= t, -np.inf, np.inf)
    return np.where(q > 0.0, interior, at_first)


def _worst_case_inverse(p: FloatArray, a: FloatArray, t: FloatArray) -> FloatArray:
    first_counts = p > SUPPORT_THRESHOLD
    second_counts = (1.0 - p) > SUPPORT_THRESHOLD
    first_ok = ~first_counts | (a >= t)
    out = np.where(second_counts, t, -np.inf)
    return np.where(first_ok, out, np.inf)


def _from_kernel(kernel: Kernel) -> Callable[[DiscreteLaw], float]:
    def evaluate(law: DiscreteLaw) -> float:
        return float(kernel(law.outcomes, law.probabilities))

    return evaluate


def linear() -> RiskMapping:
    """Expectation."""
    return RiskMapping(
        kind=RiskKind.LINEAR,
        name="linear",
        evaluate=_from_kernel(_linear_kernel),
        kernel=_linear_kernel,
        dp=_linear_dp,
        inverse=_linear_inverse,
    )


def entropic() -> RiskMapping:
    """Z -> -ln E[exp(-Z)], evaluated with a log-sum-exp shift by the smallest outcome."""
    return RiskMapping(
        kind=RiskKind.ENTROPIC,
        name="entropic",
        evaluate=_from_kernel(_entropic_kernel),
        kernel=_entropic_kernel,
        dp=_entropic_dp,
        inverse=_entropic_inverse,
    )


def worst_case() -> RiskMapping:
    """Essential infimum over atoms with mass above ``SUPPORT_THRESHOLD``."""
    return RiskMapping(
        kind=RiskKind.WORST_CASE,
        name="worst-case",
        evaluate=_from_kernel(_worst_case_kernel),
        kernel=_worst_case_kernel,
        inverse=_worst_case_inverse,
        differentiable=False,
    )
