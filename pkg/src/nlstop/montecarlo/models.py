"""Monte Carlo configuration, stopping rules and estimates."""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, model_validator

from nlstop.errors import InvalidArgumentError
from nlstop.oracles.models import ValueTable
from nlstop.solver.models import Solution

MAX_STEPS = 2**62


class MCConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    dt: float = Field(default=1e-4, gt=0)
    n_paths: int = Field(default=100_000, ge=1)
    seed: int = 42
    t_max: float = Field(default=50.0, gt=0)
    bootstrap: int = Field(default=200, ge=2)
    block_size: int = Field(default=8192, ge=1)

    @model_validator(mode="after")
    def _steps_fit(self) -> MCConfig:
        if self.t_max / self.dt >= MAX_STEPS:
            raise ValueError(f"t_max/dt = {self.t_max / self.dt:.3g} does not fit in int64")
        return self

    @property
    def max_steps(self) -> int:
        return math.ceil(self.t_max / self.dt)


class RuleKind(str, Enum):
    IMMEDIATE = "immediate"
    EXIT_INTERVAL = "exit_interval"
    FIRST_ENTRY = "first_entry"


@dataclass(frozen=True, eq=False)
class StoppingRule:
    kind: RuleKind
    a: float = 0.0
    b: float = 1.0
    table: ValueTable | None = None

    @classmethod
    def immediate(cls) -> StoppingRule:
        return cls(RuleKind.IMMEDIATE)

    @classmethod
    def exit_interval(cls, a: float, b: float) -> StoppingRule:
        if not 0.0 <= a < b <= 1.0:
            raise InvalidArgumentError(f"exit interval needs 0 <= a < b <= 1, got ({a!r}, {b!r})")
        return cls(RuleKind.EXIT_INTERVAL, a, b)

    @classmethod
    def first_entry(cls, table: ValueTable) -> StoppingRule:
        """First entry to the stopping set of ``table``."""
        return cls(RuleKind.FIRST_ENTRY, table=table)

    def interval_from(self, x0: float) -> tuple[float, float] | None:
        """The interval whose exit realises the rule from x0, or None to stop at once.

        Paths are continuous and S is closed, so the first entry to S from a
        continuation point is the exit of the continuation interval holding it.
        """
        if self.kind is RuleKind.IMMEDIATE:
            return None
        if self.kind is RuleKind.EXIT_INTERVAL:
            return (self.a, self.b) if self.a < x0 < self.b else None
        assert self.table is not None
        for a, b in self.table.continuation_intervals():
            if a < x0 < b:
                return a, b
        return None

    def describe(self) -> str:
        if self.kind is RuleKind.EXIT_INTERVAL:
            return f"exit ({self.a:.6g}, {self.b:.6g})"
        return self.kind.value


def rule_within(intervals: Iterable[tuple[float, float]], x0: float) -> StoppingRule:
    """Exit rule of the open interval holding x0, else immediate stopping."""
    for a, b in intervals:
        if a < x0 < b:
            return StoppingRule.exit_interval(a, b)
    return StoppingRule.immediate()


def rule_for(source: Solution | ValueTable, x0: float) -> StoppingRule:
    """The exit rule of the continuation component containing x0, else immediate stopping."""
    if isinstance(source, Solution):
        return rule_within(((c.x_minus, c.x_plus) for c in source.components), x0)
    return rule_within(source.continuation_intervals(), x0)


@dataclass(frozen=True)
class MCEstimate:
    value: float
    std_error: float
    n_absorbed_by_cap: int
    n_paths: int

    def to_dict(self) -> dict[str, float | int]:
        return {
            "value": self.value,
            "std_error": self.std_error,
            "n_absorbed_by_cap": self.n_absorbed_by_cap,
            "n_paths": self.n_paths,
        }
