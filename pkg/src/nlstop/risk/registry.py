# Risk mapping registry: maps CLI keys to built-in mappings.

from __future__ import annotations

from nlstop.errors import InvalidArgumentError
from nlstop.risk.base import RiskMapping

# Populated lazily with the built-ins on first lookup
_REGISTRY: dict[str, RiskMapping] = {}


def register(key: str, rm: RiskMapping) -> None:
    """Register a mapping under a key, replacing any previous entry."""
    _REGISTRY[key] = rm


def get_risk_mapping(key: str) -> RiskMapping:
    """Look up a mapping by key (``linear``, ``entropic``, ``worst-case``, ...)."""
    if not _REGISTRY:
        _load_builtins()

    normalised = key.strip().lower().replace("_", "-")
    if normalised not in _REGISTRY:
        available = ", ".join(sorted(_REGISTRY))
        raise InvalidArgumentError(
            f"Unknown risk mapping '{key}'. Available mappings: {available}"
        )
    return _REGISTRY[normalised]


def _load_builtins() -> None:
    from nlstop.risk.builtins import entropic, linear, worst_case

    register("linear", linear())
    register("entropic", entropic())
    register("worst-case", worst_case())


def available_risk_mappings() -> list[str]:
    """Return the registered keys."""
    if not _REGISTRY:
        _load_builtins()
    return sorted(_REGISTRY)
