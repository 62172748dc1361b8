"""Tests for monotone-chain hulls and envelopes."""

from __future__ import annotations

import numpy as np
from hypothesis import given
from hypothesis import strategies as st

from nlstop.oracles.hull import lower_envelope, lower_hull, upper_envelope, upper_hull

samples = st.lists(st.floats(-5.0, 5.0), min_size=3, max_size=60)


def test_upper_hull_of_tent():
    x = np.linspace(0.0, 1.0, 5)
    y = np.array([0.0, 0.5, 1.0, 0.5, 0.0])
    assert upper_hull(x, y) == [0, 2, 4]
    assert lower_hull(x, y) == [0, 4]


def test_collinear_points_are_dropped():
    x = np.linspace(0.0, 1.0, 4)
    assert upper_hull(x, 2 * x) == [0, 3]


@given(ys=samples)
def test_upper_envelope_is_concave_majorant(ys):
    y = np.array(ys)
    x = np.linspace(0.0, 1.0, y.size)
    env = upper_envelope(x, y)
    assert np.all(env >= y)
    assert np.all(np.diff(env, 2) <= 1e-9)
    assert env[0] == y[0] and env[-1] == y[-1]


@given(ys=samples)
def test_lower_envelope_is_convex_minorant(ys):
    y = np.array(ys)
    x = np.linspace(0.0, 1.0, y.size)
    env = lower_envelope(x, y)
    assert np.all(env <= y)
    assert np.all(np.diff(env, 2) >= -1e-9)
