"""Tests for extending component h-functions to members of H."""

from __future__ import annotations

import numpy as np
import pytest

from nlstop.errors import ExtensionError, NoRootError
from nlstop.grid import Grid
from nlstop.hfamily import HParams, h_eval, in_H, parse_gain
from nlstop.risk import entropic, linear
from nlstop.solver import Component, extend_to_H, solve


def _component(x_minus: float, x_plus: float, beta: float, gamma: float) -> Component:
    return Component(x_minus, x_plus, HParams(x_minus, x_plus, beta, gamma))


def test_full_interval_component_is_unchanged(sin_gain):
    comp = _component(0.0, 1.0, 1.0, 1.0)
    assert extend_to_H(linear(), sin_gain, comp) == comp.h_params


def test_flat_chord_extends_to_a_flat_line(sin_gain):
    result = extend_to_H(linear(), sin_gain, _component(0.125, 0.625, 2.0, 2.0))
    assert (result.y, result.z) == (0.0, 1.0)
    assert result.beta == pytest.approx(2.0, abs=1e-9)
    assert result.gamma == pytest.approx(2.0, abs=1e-9)


def test_right_anchored_extension(sin_gain, y_star):
    comp = _component(y_star, 1.0, float(sin_gain(y_star)), float(sin_gain(1.0)))
    result = extend_to_H(linear(), sin_gain, comp)
    assert result.z == 1.0
    assert 0.0 < result.y < y_star
    assert result.beta > 3.0
    assert in_H(result, 2.0)
    x = np.linspace(y_star, 1.0, 11)
    np.testing.assert_allclose(
        h_eval(linear(), result, x), h_eval(linear(), comp.h_params, x), atol=1e-8
    )


def test_entropic_component_extension_agrees_on_component(sin_gain):
    sol = solve(entropic(), sin_gain, Grid(1001))
    assert sol.components
    for comp in sol.components:
        result = extend_to_H(entropic(), sin_gain, comp)
        assert in_H(result, 2.0)
        x = np.linspace(comp.x_minus, comp.x_plus, 21)
        np.testing.assert_allclose(
            h_eval(entropic(), result, x), h_eval(entropic(), comp.h_params, x), atol=1e-8
        )


def test_extension_truncates_at_the_cap():
    # g = 1: g_bar + 1 = 2, g_bar + 2 = 3; the line from (0.5, 2.5) to (1, 0) reaches 3 at 0.4
    result = extend_to_H(linear(), parse_gain("poly:1"), _component(0.5, 1.0, 2.5, 0.0), 0.2)
    assert result.y == pytest.approx(0.4, abs=1e-9)
    assert result.beta == 3.0
    assert in_H(result, 1.0)


def test_overshooting_step_has_no_root():
    comp = _component(0.0, 0.5, 3.0, 0.0)
    with pytest.raises(NoRootError, match="delta_ext"):
        extend_to_H(linear(), parse_gain("poly:1"), comp)


def test_result_outside_H_is_an_error(mocker, sin_gain):
    mocker.patch("nlstop.solver.extension.in_H", return_value=False)
    with pytest.raises(ExtensionError, match="outside H"):
        extend_to_H(linear(), sin_gain, _component(0.125, 0.625, 2.0, 2.0))
