"""Typed configuration models using pydantic-settings."""

from __future__ import annotations

from pathlib import Path

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

try:
    from pydantic_settings import TomlConfigSettingsSource

    _HAS_TOML = True
except ImportError:
    _HAS_TOML = False


class SolverSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="NLSTOP_SOLVER_")

    tol_stop: float = Field(default=1e-9, description="Membership tolerance for V = g")
    tol_tan: float = Field(default=1e-8, description="Max residual of an accepted tangency pair")
    mesh: int = Field(default=200, ge=8, description="Cells per axis of the tangency scan")
    delta_factor: float = Field(
        default=10.0, gt=0, description="Walk step as a multiple of the grid spacing"
    )
    delta_ext: float = Field(default=0.05, gt=0, description="Extension step")
    newton_iterations: int = Field(default=60, ge=1)
    min_width_cells: int = Field(
        default=2, ge=1, description="Pairs narrower than this many mesh cells are discarded"
    )


class MajorantSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="NLSTOP_MAJORANT_")

    param_res: int = Field(default=64, ge=16, description="Grid points per parameter axis")
    refine_iterations: int = Field(default=40, ge=0)
    tol_dom: float = Field(default=1e-9, description="Domination slack h >= g - tol_dom")


class MonteCarloSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="NLSTOP_MC_")

    dt: float = Field(default=1e-4, gt=0)
    n_paths: int = Field(default=100_000, ge=1)
    seed: int = Field(default=42)
    t_max: float = Field(default=50.0, gt=0, description="Brownian time cap per path")
    bootstrap: int = Field(default=200, ge=2, description="Bootstrap resamples")
    bias_constant: float = Field(
        default=1.0, ge=0, description="C in the allowance C * sqrt(dt)"
    )
    block_size: int = Field(default=8192, ge=1, description="Paths per seeded work block")


class OutputSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="NLSTOP_OUTPUT_")

    directory: Path = Field(default=Path("."), description="Base directory for relative outputs")
    float_digits: int = Field(default=17, ge=1, le=17, description="Significant digits in CSV")

    def resolve(self, path: Path) -> Path:
        return path if path.is_absolute() else self.directory / path


class AppSettings(BaseSettings):
    """Top-level settings composing all sub-settings."""

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        env_nested_delimiter="__",
        env_prefix="NLSTOP_",
        toml_file="config.toml",
    )

    solver: SolverSettings = Field(default_factory=SolverSettings)
    majorant: MajorantSettings = Field(default_factory=MajorantSettings)
    montecarlo: MonteCarloSettings = Field(default_factory=MonteCarloSettings)
    output: OutputSettings = Field(default_factory=OutputSettings)
    log_level: str = Field(default="INFO")
    log_format: str = Field(default="console", pattern="^(console|json)$")
    threads: int | None = Field(default=None, ge=1, description="Worker threads; None = all cores")

    @classmethod
    def settings_customise_sources(cls, settings_cls, **kwargs):  # type: ignore[override]
        sources = (
            kwargs["env_settings"],
            kwargs["dotenv_settings"],
        )
        if _HAS_TOML:
            sources += (TomlConfigSettingsSource(settings_cls),)
        sources += (kwargs["init_settings"],)
        return sources
