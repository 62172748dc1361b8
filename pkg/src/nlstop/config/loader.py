"""Cached settings access shared by every CLI command."""

from __future__ import annotations

from functools import lru_cache

from nlstop.config.settings import AppSettings


@lru_cache(maxsize=1)
def get_settings() -> AppSettings:
    """Settings from NLSTOP_* env, .env and config.toml in the working directory."""
    return AppSettings()


def reset_settings() -> None:
    """Forget the cached settings; the next ``get_settings`` re-reads env and files."""
    get_settings.cache_clear()
