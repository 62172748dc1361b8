"""Column schemas of the CSV outputs."""

from __future__ import annotations

import polars as pl

# Value function on a grid: written by `solve` and `oracle`, read back by `verify`.
VALUE_TABLE_SCHEMA = {
    "x": pl.Float64,
    "g": pl.Float64,
    "V": pl.Float64,
    "stopping": pl.Boolean,
}

# Majorant with the minimising h-parameters at each grid point.
MAJORANT_SCHEMA = {
    "x": pl.Float64,
    "g": pl.Float64,
    "w": pl.Float64,
    "y": pl.Float64,
    "z": pl.Float64,
    "beta": pl.Float64,
    "gamma": pl.Float64,
}

VALUE_TABLE_COLUMNS = list(VALUE_TABLE_SCHEMA.keys())
MAJORANT_COLUMNS = list(MAJORANT_SCHEMA.keys())

COMPONENT_KEYS = ("x_minus", "x_plus", "beta", "gamma")
