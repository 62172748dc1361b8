"""Tests for discrete and two-point laws."""

from __future__ import annotations

import numpy as np
import pytest

from nlstop.errors import InvalidArgumentError
from nlstop.risk.laws import DiscreteLaw, TwoPointLaw


def test_probabilities_must_sum_to_one():
    with pytest.raises(InvalidArgumentError, match="sum to"):
        DiscreteLaw(np.array([0.0, 1.0]), np.array([0.5, 0.4]))


def test_sum_tolerance_is_tight():
    DiscreteLaw(np.array([0.0, 1.0]), np.array([0.5, 0.5 + 5e-13]))
    with pytest.raises(InvalidArgumentError):
        DiscreteLaw(np.array([0.0, 1.0]), np.array([0.5, 0.5 + 1e-9]))


@pytest.mark.parametrize(
    ("outcomes", "probs"),
    [
        ([], []),
        ([1.0, 2.0], [1.0]),
        ([np.inf], [1.0]),
        ([1.0, 2.0], [1.5, -0.5]),
    ],
)
def test_malformed_laws_rejected(outcomes, probs):
    with pytest.raises(InvalidArgumentError):
        DiscreteLaw(np.array(outcomes, dtype=float), np.array(probs, dtype=float))


def test_law_is_read_only():
    law = DiscreteLaw.point_mass(3.0)
    with pytest.raises(ValueError):
        law.outcomes[0] = 1.0


def test_empirical_law_ignores_sample_order():
    a = DiscreteLaw.empirical([2.0, 1.0, 2.0, 3.0])
    b = DiscreteLaw.empirical([3.0, 2.0, 2.0, 1.0])
    np.testing.assert_array_equal(a.outcomes, [1.0, 2.0, 3.0])
    np.testing.assert_array_equal(a.probabilities, b.probabilities)
    np.testing.assert_allclose(a.probabilities, [0.25, 0.5, 0.25])


def test_shifted():
    law = DiscreteLaw(np.array([0.0, 1.0]), np.array([0.3, 0.7])).shifted(2.0)
    np.testing.assert_array_equal(law.outcomes, [2.0, 3.0])
    assert len(law) == 2


def test_two_point_to_discrete():
    law = TwoPointLaw(0.25, 1.0, 3.0).to_discrete()
    assert law.to_dict() == {"outcomes": [1.0, 3.0], "probabilities": [0.25, 0.75]}


def test_two_point_validates_probability():
    with pytest.raises(InvalidArgumentError, match="p_first"):
        TwoPointLaw(1.5, 0.0, 1.0)
