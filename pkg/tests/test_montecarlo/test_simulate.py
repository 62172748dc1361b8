"""Tests for the Euler path simulator."""

from __future__ import annotations

import math

import numpy as np
import pytest
from pydantic import ValidationError

from nlstop.errors import HorizonExhaustedWarning, InvalidArgumentError
from nlstop.grid import Grid
from nlstop.hfamily import GainSpec, parse_gain
from nlstop.montecarlo import MCConfig, StoppingRule, simulate_rule
from nlstop.montecarlo.verify import bias_allowance
from nlstop.risk import DiscreteLaw, entropic, eval_discrete, linear, worst_case

FAST = MCConfig(dt=1e-3, n_paths=20_000, seed=7, bootstrap=50, block_size=4096)


def test_config_validation():
    assert MCConfig(dt=1e-4, t_max=50.0).max_steps == 500_000
    assert MCConfig(dt=0.3, t_max=1.0).max_steps == 4
    with pytest.raises(ValidationError):
        MCConfig(dt=0.0)
    with pytest.raises(ValidationError):
        MCConfig(n_paths=0)


def test_immediate_rule_is_exact(sin_gain):
    est = simulate_rule(linear(), sin_gain, StoppingRule.immediate(), 0.3, FAST)
    assert est.value == sin_gain(0.3)
    assert est.std_error == 0.0


def test_start_outside_interval_stops_at_once(sin_gain):
    est = simulate_rule(linear(), sin_gain, StoppingRule.exit_interval(0.5, 0.9), 0.2, FAST)
    assert est.value == sin_gain(0.2)


def test_linear_exit_of_unit_interval():
    g = parse_gain("poly:0,1")
    est = simulate_rule(linear(), g, StoppingRule.exit_interval(0.0, 1.0), 0.25, FAST)
    assert est.std_error > 0.0
    assert abs(est.value - 0.25) <= 3 * est.std_error + bias_allowance(FAST.dt)
    assert est.n_absorbed_by_cap == 0


def test_worst_case_exit_is_the_smaller_payoff():
    g = parse_gain("poly:0,1")
    est = simulate_rule(worst_case(), g, StoppingRule.exit_interval(0.2, 0.6), 0.4, FAST)
    assert est.value == pytest.approx(0.2)


def test_worst_case_between_equal_peaks(sin_gain):
    est = simulate_rule(worst_case(), sin_gain, StoppingRule.exit_interval(0.125, 0.625), 0.5, FAST)
    assert est.value == pytest.approx(2.0, abs=1e-12)


def test_entropic_constant_gain():
    est = simulate_rule(
        entropic(), GainSpec.polynomial(1.5), StoppingRule.exit_interval(0.1, 0.9), 0.5, FAST
    )
    assert est.value == pytest.approx(1.5)
    assert est.std_error == 0.0


def test_results_are_reproducible_across_threads(sin_gain):
    rule = StoppingRule.exit_interval(0.2, 0.8)
    one = simulate_rule(entropic(), sin_gain, rule, 0.45, FAST, threads=1)
    many = simulate_rule(entropic(), sin_gain, rule, 0.45, FAST, threads=4)
    assert one == many


def test_seed_changes_the_estimate(sin_gain):
    rule = StoppingRule.exit_interval(0.2, 0.8)
    a = simulate_rule(linear(), sin_gain, rule, 0.45, FAST)
    b = simulate_rule(linear(), sin_gain, rule, 0.45, FAST.model_copy(update={"seed": 8}))
    assert a.value != b.value


def test_short_horizon_warns(sin_gain):
    cfg = MCConfig(dt=1e-4, n_paths=2000, t_max=1e-3, bootstrap=10)
    with pytest.warns(HorizonExhaustedWarning):
        est = simulate_rule(linear(), sin_gain, StoppingRule.exit_interval(0.0, 1.0), 0.5, cfg)
    assert est.n_absorbed_by_cap > 0.01 * cfg.n_paths


def test_invalid_inputs(sin_gain):
    with pytest.raises(InvalidArgumentError, match="x0"):
        simulate_rule(linear(), sin_gain, StoppingRule.immediate(), 1.5, FAST)
    with pytest.raises(InvalidArgumentError, match="exit interval"):
        StoppingRule.exit_interval(0.6, 0.4)


def test_bias_allowance():
    assert bias_allowance(1e-4) == pytest.approx(0.01)
    assert bias_allowance(1e-4, 2.0) == pytest.approx(2 * math.sqrt(1e-4))


@pytest.mark.parametrize("factory", [linear, entropic, worst_case])
def test_estimate_ignores_sample_order(factory, sin_gain):
    rng = np.random.default_rng(11)
    payoffs = rng.choice(sin_gain.on_grid(Grid(101)), size=5000)
    rm = factory()
    ordered = eval_discrete(rm, DiscreteLaw.empirical(payoffs))
    shuffled = eval_discrete(rm, DiscreteLaw.empirical(rng.permutation(payoffs)))
    assert ordered == shuffled


@pytest.mark.slow
def test_exit_bias_shrinks_with_step():
    a, b, x0 = 0.2, 0.8, 0.35
    g = parse_gain("poly:0,0,1")
    p_low = (b - x0) / (b - a)
    exact = p_low * a**2 + (1.0 - p_low) * b**2
    errors, ses = [], []
    for dt in (1e-3, 1e-4, 1e-5):
        cfg = MCConfig(dt=dt, n_paths=20_000, seed=3, t_max=4.0, bootstrap=50, block_size=4096)
        est = simulate_rule(linear(), g, StoppingRule.exit_interval(a, b), x0, cfg)
        assert est.n_absorbed_by_cap == 0
        assert abs(est.value - exact) <= 4 * est.std_error + bias_allowance(dt)
        errors.append(abs(est.value - exact))
        ses.append(est.std_error)
    assert errors[-1] <= errors[0] + 3 * max(ses[0], ses[-1])
