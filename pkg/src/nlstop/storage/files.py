"""Reading and writing value tables, majorants and component lists."""

from __future__ import annotations

import json
from collections.abc import Sequence
from pathlib import Path

import numpy as np
import polars as pl

from nlstop.errors import InvalidArgumentError, OutputPathError
from nlstop.grid import Grid
from nlstop.majorant.models import MajorantResult
from nlstop.oracles.models import DEFAULT_TOL_STOP, ValueTable
from nlstop.solver.models import Component
from nlstop.storage.schemas import (
    COMPONENT_KEYS,
    MAJORANT_SCHEMA,
    VALUE_TABLE_COLUMNS,
    VALUE_TABLE_SCHEMA,
)
from nlstop.utils.logging import get_logger

logger = get_logger(__name__)

# 16 digits after the point in scientific notation = 17 significant digits.
FLOAT_PRECISION = 16
GRID_ATOL = 1e-12


def value_table_frame(table: ValueTable) -> pl.DataFrame:
    return pl.DataFrame(
        {
            "x": table.grid.points,
            "g": table.g_values,
            "V": table.values,
            "stopping": table.stopping_mask,
        },
        schema=VALUE_TABLE_SCHEMA,
    )


def majorant_frame(result: MajorantResult) -> pl.DataFrame:
    return pl.DataFrame(
        {
            "x": result.grid.points,
            "g": result.g_values,
            "w": result.w_values,
            "y": result.y,
            "z": result.z,
            "beta": result.beta,
            "gamma": result.gamma,
        },
        schema=MAJORANT_SCHEMA,
    )


def write_csv(df: pl.DataFrame, path: Path, float_precision: int = FLOAT_PRECISION) -> Path:
    """Write ``df`` with a header row and full-precision scientific floats."""
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        df.write_csv(path, float_scientific=True, float_precision=float_precision)
    except (OSError, pl.exceptions.PolarsError) as exc:
        raise OutputPathError(f"cannot write '{path}': {exc}") from exc
    logger.info("csv_written", path=str(path), rows=df.height)
    return path


def write_components_json(components: Sequence[Component], path: Path) -> Path:
    """Components as a JSON array of {x_minus, x_plus, beta, gamma} objects."""
    payload = [comp.to_dict() for comp in components]
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(json.dumps(payload, indent=2) + "\n")
    except OSError as exc:
        raise OutputPathError(f"cannot write '{path}': {exc}") from exc
    logger.info("components_written", path=str(path), count=len(payload))
    return path


def read_components_json(path: Path) -> list[dict[str, float]]:
    try:
        payload = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise OutputPathError(f"cannot read components from '{path}': {exc}") from exc
    for item in payload:
        missing = [k for k in COMPONENT_KEYS if k not in item]
        if missing:
            raise InvalidArgumentError(f"component in '{path}' lacks {missing}")
    return [{k: float(item[k]) for k in COMPONENT_KEYS} for item in payload]


def read_value_table_csv(path: Path, tol_stop: float = DEFAULT_TOL_STOP) -> ValueTable:
    """Load a value table written by :func:`write_csv`; the x column must be a uniform grid."""
    try:
        df = pl.read_csv(path)
    except (OSError, pl.exceptions.PolarsError) as exc:
        raise OutputPathError(f"cannot read '{path}': {exc}") from exc

    missing = [c for c in VALUE_TABLE_COLUMNS if c not in df.columns]
    if missing:
        raise InvalidArgumentError(f"'{path}' lacks column(s) {missing}")
    df = df.select(VALUE_TABLE_COLUMNS).cast(VALUE_TABLE_SCHEMA)  # type: ignore[arg-type]

    grid = Grid(df.height)
    x = df["x"].to_numpy()
    if not np.allclose(x, grid.points, rtol=0.0, atol=GRID_ATOL):
        raise InvalidArgumentError(f"'{path}' x column is not a uniform grid of [0, 1]")
    return ValueTable(grid, df["g"].to_numpy(), df["V"].to_numpy(), tol_stop)
