"""Tests for the state-space grid and thread fan-out."""

from __future__ import annotations

import numpy as np
import pytest

from nlstop.errors import InvalidArgumentError
from nlstop.grid import Grid, lipschitz_bound
from nlstop.utils.parallel import ordered_map, resolve_threads


def test_grid_points():
    grid = Grid(5)
    np.testing.assert_array_equal(grid.points, [0.0, 0.25, 0.5, 0.75, 1.0])
    assert grid.spacing == 0.25
    assert len(grid) == 5
    assert grid == Grid(5)
    assert grid != Grid(6)


def test_grid_is_read_only():
    with pytest.raises(ValueError):
        Grid(5).points[0] = 1.0


def test_grid_rejects_too_few_points():
    with pytest.raises(InvalidArgumentError, match="3 points"):
        Grid(2)


def test_grid_interp():
    grid = Grid(5)
    values = np.array([0.0, 1.0, 2.0, 3.0, 4.0])
    assert grid.interp(values, 0.375) == pytest.approx(1.5)


def test_lipschitz_bound():
    grid = Grid(11)
    assert lipschitz_bound(3.0 * grid.points, grid) == pytest.approx(3.0)


def test_ordered_map_keeps_input_order():
    assert ordered_map(lambda v: v * v, range(10), threads=4) == [v * v for v in range(10)]
    assert ordered_map(lambda v: v, [], threads=None) == []


def test_resolve_threads():
    assert resolve_threads(3) == 3
    assert resolve_threads(None) >= 1
    with pytest.raises(InvalidArgumentError):
        resolve_threads(0)
