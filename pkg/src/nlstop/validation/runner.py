"""Axiom runner: orchestrates the checks and produces reports."""

from __future__ import annotations

import numpy as np

from nlstop.errors import InvalidArgumentError
from nlstop.risk.base import RiskMapping
from nlstop.validation.axioms import (
    check_monotonicity,
    check_normalisation,
    check_strong_monotonicity,
    check_translation,
)
from nlstop.validation.models import CheckReport


def _rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed)))


def check_axioms(rm: RiskMapping, trials: int = 1000, seed: int = 42) -> CheckReport:
    """Normalisation, monotonicity and translation invariance on random laws."""
    if trials < 1:
        raise InvalidArgumentError(f"trials must be >= 1, got {trials}")
    rng = _rng(seed)
    results = [
        check_normalisation(rm),
        check_monotonicity(rm, rng, trials),
        check_translation(rm, rng, trials),
    ]
    return CheckReport(subject=rm.name, results=results)


def check_strictness(rm: RiskMapping, trials: int = 1000, seed: int = 42) -> CheckReport:
    """Randomized strictness check of the two-point evaluation, assumed by the smooth-fit solver."""
    if trials < 1:
        raise InvalidArgumentError(f"trials must be >= 1, got {trials}")
    return CheckReport(
        subject=rm.name, results=[check_strong_monotonicity(rm, _rng(seed), trials)]
    )
