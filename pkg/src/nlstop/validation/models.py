"""Pass/warn/fail reports shared by axiom checks and Monte Carlo verification."""

from __future__ import annotations

import datetime
from enum import Enum
from typing import Any

from pydantic import BaseModel, Field


class CheckStatus(str, Enum):
    PASS = "pass"
    WARN = "warn"
    FAIL = "fail"


class CheckResult(BaseModel):
    """Outcome of one check; witnesses and estimates travel in ``details``."""

    check_name: str
    status: CheckStatus
    message: str
    details: dict[str, Any] | None = None


class CheckReport(BaseModel):
    """Aggregated checks for one subject (a risk mapping, a solution at x0, ...)."""

    subject: str
    timestamp: datetime.datetime = Field(
        default_factory=lambda: datetime.datetime.now(datetime.timezone.utc)
    )
    results: list[CheckResult]

    @property
    def overall_status(self) -> CheckStatus:
        statuses = {r.status for r in self.results}
        if CheckStatus.FAIL in statuses:
            return CheckStatus.FAIL
        if CheckStatus.WARN in statuses:
            return CheckStatus.WARN
        return CheckStatus.PASS

    def result(self, check_name: str) -> CheckResult:
        for r in self.results:
            if r.check_name == check_name:
                return r
        raise KeyError(check_name)
