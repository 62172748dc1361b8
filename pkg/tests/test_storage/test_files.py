"""Tests for CSV and JSON outputs."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np
import polars as pl
import pytest

from nlstop.errors import InvalidArgumentError, OutputPathError
from nlstop.grid import Grid
from nlstop.hfamily import HParams
from nlstop.majorant import compute_majorant
from nlstop.oracles import worst_case_value
from nlstop.risk import linear
from nlstop.solver import Component
from nlstop.storage.files import (
    majorant_frame,
    read_components_json,
    read_value_table_csv,
    value_table_frame,
    write_components_json,
    write_csv,
)
from nlstop.storage.schemas import MAJORANT_COLUMNS, VALUE_TABLE_COLUMNS


def test_value_table_csv_keeps_full_precision(sin_gain, out_dir: Path):
    table = worst_case_value(sin_gain, Grid(201))
    path = write_csv(value_table_frame(table), out_dir / "v.csv")
    assert path.read_text().splitlines()[0] == "x,g,V,stopping"

    back = read_value_table_csv(path)
    np.testing.assert_array_equal(back.values, table.values)
    np.testing.assert_array_equal(back.g_values, table.g_values)
    np.testing.assert_array_equal(back.stopping_mask, table.stopping_mask)
    assert back.grid == table.grid


def test_csv_output_is_byte_identical(sin_gain, out_dir: Path):
    table = worst_case_value(sin_gain, Grid(101))
    first = write_csv(value_table_frame(table), out_dir / "a.csv").read_bytes()
    second = write_csv(value_table_frame(table), out_dir / "b.csv").read_bytes()
    assert first == second


def test_majorant_frame_columns(sin_gain):
    result = compute_majorant(linear(), sin_gain, Grid(51), 16, refine_iterations=0)
    df = majorant_frame(result)
    assert df.columns == MAJORANT_COLUMNS
    assert df.height == 51
    assert df["w"].dtype == pl.Float64


def test_components_json(out_dir: Path):
    comps = [Component(0.125, 0.625, HParams(0.125, 0.625, 2.0, 2.0))]
    path = write_components_json(comps, out_dir / "c.json")
    assert json.loads(path.read_text()) == [
        {"x_minus": 0.125, "x_plus": 0.625, "beta": 2.0, "gamma": 2.0}
    ]
    assert read_components_json(path) == [comp.to_dict() for comp in comps]


def test_components_json_requires_keys(out_dir: Path):
    path = out_dir / "bad.json"
    path.write_text('[{"x_minus": 0.1, "x_plus": 0.2}]')
    with pytest.raises(InvalidArgumentError, match="beta"):
        read_components_json(path)


def test_unwritable_path_names_the_path(sin_gain, out_dir: Path):
    blocker = out_dir / "file"
    blocker.write_text("")
    table = worst_case_value(sin_gain, Grid(11))
    with pytest.raises(OutputPathError, match="file"):
        write_csv(value_table_frame(table), blocker / "v.csv")


def test_read_rejects_non_uniform_grid(out_dir: Path):
    path = out_dir / "v.csv"
    pl.DataFrame(
        {"x": [0.0, 0.3, 1.0], "g": [1.0, 1.0, 1.0], "V": [1.0, 1.0, 1.0], "stopping": [True] * 3}
    ).write_csv(path)
    with pytest.raises(InvalidArgumentError, match="uniform"):
        read_value_table_csv(path)


def test_read_requires_columns(out_dir: Path):
    path = out_dir / "v.csv"
    pl.DataFrame({"x": [0.0, 0.5, 1.0], "g": [1.0, 1.0, 1.0]}).write_csv(path)
    with pytest.raises(InvalidArgumentError, match="column"):
        read_value_table_csv(path)


def test_missing_file_is_an_output_path_error(out_dir: Path):
    with pytest.raises(OutputPathError):
        read_value_table_csv(out_dir / "absent.csv")


def test_value_table_columns(sin_gain):
    df = value_table_frame(worst_case_value(sin_gain, Grid(11)))
    assert df.columns == VALUE_TABLE_COLUMNS
    assert df["stopping"].dtype == pl.Boolean
