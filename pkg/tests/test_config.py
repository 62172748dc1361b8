"""Tests for configuration loading."""

from __future__ import annotations

from pathlib import Path

import pytest
from pydantic import ValidationError

from nlstop.config.loader import get_settings, reset_settings
from nlstop.config.settings import AppSettings, MonteCarloSettings, OutputSettings

pytestmark = pytest.mark.usefixtures("clean_env")


def test_default_settings():
    """AppSettings can be created with defaults."""
    settings = AppSettings()
    assert settings.log_level == "INFO"
    assert settings.threads is None
    assert settings.solver.tol_stop == 1e-9
    assert settings.solver.delta_factor == 10.0
    assert settings.majorant.param_res == 64
    assert settings.montecarlo.seed == 42
    assert settings.montecarlo.t_max == 50.0
    assert settings.output.float_digits == 17


def test_output_resolve():
    out = OutputSettings(directory=Path("/tmp/runs"))
    assert out.resolve(Path("v.csv")) == Path("/tmp/runs/v.csv")
    assert out.resolve(Path("/abs/v.csv")) == Path("/abs/v.csv")


def test_env_overrides(monkeypatch: pytest.MonkeyPatch):
    monkeypatch.setenv("NLSTOP_MC_N_PATHS", "500")
    assert MonteCarloSettings().n_paths == 500


def test_toml_file_is_read(tmp_path: Path):
    (tmp_path / "config.toml").write_text('log_level = "DEBUG"\n\n[majorant]\nparam_res = 32\n')
    settings = get_settings()
    assert settings.log_level == "DEBUG"
    assert settings.majorant.param_res == 32


def test_env_beats_toml(tmp_path: Path, monkeypatch: pytest.MonkeyPatch):
    (tmp_path / "config.toml").write_text('log_level = "DEBUG"\n')
    monkeypatch.setenv("NLSTOP_LOG_LEVEL", "WARNING")
    assert get_settings().log_level == "WARNING"


def test_settings_are_cached():
    assert get_settings() is get_settings()


def test_reset_rereads_environment(monkeypatch: pytest.MonkeyPatch):
    assert get_settings().threads is None
    monkeypatch.setenv("NLSTOP_THREADS", "2")
    assert get_settings().threads is None
    reset_settings()
    assert get_settings().threads == 2


def test_invalid_values_rejected():
    with pytest.raises(ValidationError):
        MonteCarloSettings(dt=0.0)
    with pytest.raises(ValidationError):
        AppSettings(log_format="xml")
