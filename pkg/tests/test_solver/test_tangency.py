"""Tests for the tangency-pair search."""

from __future__ import annotations

import numpy as np
import pytest

from nlstop.errors import DerivativeUnavailableError
from nlstop.hfamily import parse_gain
from nlstop.risk import RiskMapping, entropic, linear, worst_case
from nlstop.solver import TangencyPair, find_tangency_pairs, tangency_residuals


def _has_pair(pairs: list[TangencyPair], y: float, z: float, tol: float = 1e-6) -> bool:
    return any(abs(p.y - y) <= tol and abs(p.z - z) <= tol for p in pairs)


def test_concave_gain_has_only_the_trivial_pair():
    pairs = find_tangency_pairs(linear(), parse_gain("poly:0,1,-1"))
    assert len(pairs) == 1
    assert pairs[0].y == pytest.approx(0.0, abs=1e-6)
    assert pairs[0].z == pytest.approx(1.0, abs=1e-6)


def test_linear_sine_pairs(sin_gain, y_star):
    pairs = find_tangency_pairs(linear(), sin_gain)
    assert _has_pair(pairs, 0.125, 0.625)
    assert _has_pair(pairs, y_star, 1.0)
    assert y_star == pytest.approx(0.642, abs=1e-3)
    assert pairs == sorted(pairs)
    assert all(p.max_residual <= 1e-8 for p in pairs)


def test_residuals_vanish_at_the_flat_chord(sin_gain):
    r1, r2 = tangency_residuals(linear(), sin_gain, 0.125, 0.625)
    assert float(r1) == pytest.approx(0.0, abs=1e-12)
    assert float(r2) == pytest.approx(0.0, abs=1e-12)


def test_residuals_are_trivial_on_the_boundary(sin_gain):
    r1, _ = tangency_residuals(entropic(), sin_gain, 0.0, 0.4)
    _, r2 = tangency_residuals(entropic(), sin_gain, 0.3, 1.0)
    assert float(r1) == 0.0
    assert float(r2) == 0.0


def test_entropic_sine_has_interior_pair(sin_gain):
    pairs = find_tangency_pairs(entropic(), sin_gain)
    interior = [p for p in pairs if 0.0 < p.y and p.z < 1.0]
    assert interior
    for p in interior:
        r1, r2 = tangency_residuals(entropic(), sin_gain, p.y, p.z)
        assert max(abs(float(r1)), abs(float(r2))) <= 1e-8


def test_custom_mapping_uses_difference_slopes(sin_gain):
    mean = RiskMapping.custom(lambda law: float(np.dot(law.outcomes, law.probabilities)))
    r1, r2 = tangency_residuals(mean, sin_gain, 0.125, 0.625)
    assert float(r1) == pytest.approx(0.0, abs=1e-6)
    assert float(r2) == pytest.approx(0.0, abs=1e-6)


def test_pairs_do_not_depend_on_threads(sin_gain):
    assert find_tangency_pairs(linear(), sin_gain, threads=1) == find_tangency_pairs(
        linear(), sin_gain, threads=4
    )


def test_worst_case_and_piecewise_gains_rejected(sin_gain):
    with pytest.raises(DerivativeUnavailableError):
        find_tangency_pairs(worst_case(), sin_gain)
    with pytest.raises(DerivativeUnavailableError):
        find_tangency_pairs(linear(), parse_gain("pwl:0:0,0.5:1,1:0"))


@pytest.mark.parametrize("mesh", [97, 200])
def test_edge_pair_is_solved_between_nodes(sin_gain, y_star, mesh):
    pairs = find_tangency_pairs(linear(), sin_gain, mesh)
    edge = [p for p in pairs if p.z == 1.0 and p.y > 0.0]
    assert len(edge) == 1
    assert edge[0].y == pytest.approx(y_star, abs=1e-9)
    assert edge[0].residual_right == 0.0
