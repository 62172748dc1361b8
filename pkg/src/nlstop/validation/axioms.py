"""Randomised checks of the risk-mapping axioms on finite laws."""

from __future__ import annotations

from collections.abc import Iterator

import numpy as np

from nlstop.risk.base import RiskMapping, eval_discrete
from nlstop.risk.laws import DiscreteLaw
from nlstop.validation.models import CheckResult, CheckStatus

ABS_TOL = 1e-12
REL_TOL = 1e-9
MAX_ATOMS = 6
OUTCOME_RANGE = 5.0


def random_laws(rng: np.random.Generator, trials: int) -> Iterator[DiscreteLaw]:
    """Laws with 1..MAX_ATOMS atoms, outcomes uniform in +-OUTCOME_RANGE, Dirichlet weights."""
    for _ in range(trials):
        k = int(rng.integers(1, MAX_ATOMS + 1))
        outcomes = rng.uniform(-OUTCOME_RANGE, OUTCOME_RANGE, size=k)
        probs = rng.dirichlet(np.ones(k))
        probs[-1] = 1.0 - probs[:-1].sum()
        yield DiscreteLaw(outcomes, np.clip(probs, 0.0, 1.0))


def check_normalisation(rm: RiskMapping) -> CheckResult:
    """The point mass at 0 must be worth 0."""
    law = DiscreteLaw.point_mass(0.0)
    value = eval_discrete(rm, law)
    if abs(value) <= ABS_TOL:
        return CheckResult(
            check_name="normalisation",
            status=CheckStatus.PASS,
            message="value of the point mass at 0 is 0",
        )
    return CheckResult(
        check_name="normalisation",
        status=CheckStatus.FAIL,
        message=f"value of the point mass at 0 is {value!r}",
        details={"witness": law.to_dict(), "value": value},
    )


def check_monotonicity(rm: RiskMapping, rng: np.random.Generator, trials: int) -> CheckResult:
    """Raising outcomes atom by atom must never lower the value."""
    for law in random_laws(rng, trials):
        raised = DiscreteLaw(law.outcomes + rng.uniform(0.0, 2.0, size=len(law)), law.probabilities)
        low, high = eval_discrete(rm, law), eval_discrete(rm, raised)
        if high < low - ABS_TOL:
            return CheckResult(
                check_name="monotonicity",
                status=CheckStatus.FAIL,
                message=f"raising outcomes lowered the value from {low:.6g} to {high:.6g}",
                details={"witness": law.to_dict(), "raised": raised.to_dict()},
            )
    return CheckResult(
        check_name="monotonicity",
        status=CheckStatus.PASS,
        message=f"{trials} coupled pairs ordered correctly",
    )


def check_translation(rm: RiskMapping, rng: np.random.Generator, trials: int) -> CheckResult:
    """Shifting every outcome by c must shift the value by c."""
    for law in random_laws(rng, trials):
        c = float(rng.uniform(-OUTCOME_RANGE, OUTCOME_RANGE))
        base = eval_discrete(rm, law)
        shifted = eval_discrete(rm, law.shifted(c))
        if abs(shifted - (base + c)) > REL_TOL * (1.0 + abs(base) + abs(c)):
            return CheckResult(
                check_name="translation_invariance",
                status=CheckStatus.FAIL,
                message=f"shift by {c:.6g} moved the value from {base:.6g} to {shifted:.6g}",
                details={"witness": law.to_dict(), "shift": c},
            )
    return CheckResult(
        check_name="translation_invariance",
        status=CheckStatus.PASS,
        message=f"{trials} shifted laws moved by exactly the shift",
    )


def check_strong_monotonicity(
    rm: RiskMapping, rng: np.random.Generator, trials: int
) -> CheckResult:
    """Strictly raising a charged outcome of a two-point law must strictly raise its value."""
    for _ in range(trials):
        p = float(rng.uniform(0.05, 0.95))
        a, b = rng.uniform(-OUTCOME_RANGE, OUTCOME_RANGE, size=2)
        d = float(rng.uniform(0.1, 1.0))
        which = int(rng.integers(0, 2))
        a_up, b_up = (a + d, b) if which == 0 else (a, b + d)
        before = float(rm.two_point(p, a, b))
        after = float(rm.two_point(p, a_up, b_up))
        if not after > before:
            return CheckResult(
                check_name="strong_monotonicity",
                status=CheckStatus.FAIL,
                message=f"raising outcome {which + 1} by {d:.3g} left the value at {before:.6g}",
                details={
                    "witness": {"p_first": p, "v_first": float(a), "v_second": float(b)},
                    "raised": {"p_first": p, "v_first": float(a_up), "v_second": float(b_up)},
                },
            )
    return CheckResult(
        check_name="strong_monotonicity",
        status=CheckStatus.PASS,
        message=f"{trials} strict increases preserved",
    )
