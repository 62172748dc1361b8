"""Shared test fixtures."""

from __future__ import annotations

import os
from pathlib import Path

import numpy as np
import pytest

from nlstop.grid import Grid
from nlstop.hfamily.gain import GainSpec, parse_gain
from nlstop.risk.base import RiskMapping
from nlstop.risk.builtins import entropic, linear, worst_case

# g(x) = 1 + sin(4 pi x): peaks of 2 at 1/8 and 5/8, g(1/2) = g(1) = 1.
SIN_GAIN = "sin:1,1,4,0"
CONCAVE_GAIN = "poly:0,1,-1"


@pytest.fixture(scope="session")
def y_star() -> float:
    """Root in (0.6, 0.7) of 4 pi cos(4 pi y)(1 - y) = -sin(4 pi y), by bisection."""

    def f(y: float) -> float:
        return 4 * np.pi * np.cos(4 * np.pi * y) * (1 - y) + np.sin(4 * np.pi * y)

    lo, hi = 0.6, 0.7
    assert f(lo) * f(hi) < 0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(lo) * f(mid) <= 0:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


@pytest.fixture
def lin() -> RiskMapping:
    return linear()


@pytest.fixture
def ent() -> RiskMapping:
    return entropic()


@pytest.fixture
def wc() -> RiskMapping:
    return worst_case()


@pytest.fixture(params=["linear", "entropic", "worst-case"])
def builtin_rm(request: pytest.FixtureRequest) -> RiskMapping:
    return {"linear": linear, "entropic": entropic, "worst-case": worst_case}[request.param]()


@pytest.fixture
def sin_gain() -> GainSpec:
    return parse_gain(SIN_GAIN)


@pytest.fixture
def concave_gain() -> GainSpec:
    return parse_gain(CONCAVE_GAIN)


@pytest.fixture
def grid_1001() -> Grid:
    return Grid(1001)


@pytest.fixture
def grid_201() -> Grid:
    return Grid(201)


@pytest.fixture
def out_dir(tmp_path: Path) -> Path:
    path = tmp_path / "out"
    path.mkdir()
    return path


@pytest.fixture
def clean_env(monkeypatch: pytest.MonkeyPatch, tmp_path: Path):
    """Each test sees defaults, not the working directory's config.toml or env."""
    from nlstop.config.loader import reset_settings

    monkeypatch.chdir(tmp_path)
    for key in [k for k in os.environ if k.startswith("NLSTOP_")]:
        monkeypatch.delenv(key)
    reset_settings()
    yield
    reset_settings()
