"""Euler simulation of Brownian motion stopped on leaving an interval."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from nlstop.errors import HorizonExhaustedWarning, InvalidArgumentError
from nlstop.hfamily.gain import GainSpec
from nlstop.montecarlo.models import MCConfig, MCEstimate, StoppingRule
from nlstop.risk.base import RiskMapping, eval_discrete
from nlstop.risk.laws import DiscreteLaw
from nlstop.utils.logging import get_logger
from nlstop.utils.parallel import ordered_map

logger = get_logger(__name__)

FloatArray = npt.NDArray[np.float64]

CAP_WARN_FRACTION = 0.01
# Entropy word appended to the seed for the bootstrap stream.
BOOTSTRAP_STREAM = 0xB007


@dataclass(frozen=True)
class _BlockOutcome:
    stopped_at: FloatArray
    n_capped: int


def _simulate_block(
    seed: np.random.SeedSequence, n: int, x0: float, a: float, b: float, cfg: MCConfig
) -> _BlockOutcome:
    """Paths from x0 until they leave (a, b) or hit the time cap.

    A step that ends inside the interval may still have crossed a barrier;
    that is decided with the Brownian-bridge crossing probability
    exp(-2 d_start d_end / dt) for each barrier.
    """
    rng = np.random.Generator(np.random.Philox(seed))
    sq = math.sqrt(cfg.dt)
    pos = np.full(n, x0)
    stopped = np.full(n, np.nan)
    active = np.arange(n)

    for _ in range(cfg.max_steps):
        if active.size == 0:
            break
        start = pos[active]
        end = start + sq * rng.standard_normal(active.size)
        u = rng.random((2, active.size))

        below = end <= a
        above = end >= b
        inside = ~(below | above)
        with np.errstate(over="ignore"):
            p_low = np.exp(-2.0 * (start - a) * (end - a) / cfg.dt)
            p_high = np.exp(-2.0 * (b - start) * (b - end) / cfg.dt)
        bridge_low = inside & (u[0] < p_low)
        bridge_high = inside & (u[1] < p_high) & ~(bridge_low & (p_low >= p_high))
        bridge_low &= ~bridge_high

        exit_low = below | bridge_low
        exit_high = above | bridge_high
        stopped[active[exit_low]] = a
        stopped[active[exit_high]] = b
        pos[active] = end
        active = active[~(exit_low | exit_high)]

    # Paths still running at the cap stop where they are.
    stopped[active] = pos[active]
    return _BlockOutcome(stopped, int(active.size))


def bootstrap_std_error(
    rm: RiskMapping, law: DiscreteLaw, n: int, resamples: int, seed: int
) -> float:
    """Standard error of the risk value over multinomial resamples of the atom counts."""
    if len(law) == 1:
        return 0.0
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, BOOTSTRAP_STREAM])))
    counts = rng.multinomial(n, law.probabilities, size=resamples)
    probs = counts / n
    if rm.kernel is not None:
        values = rm.kernel(np.broadcast_to(law.outcomes, probs.shape), probs)
    else:
        values = np.array(
            [
                eval_discrete(rm, DiscreteLaw(law.outcomes[row > 0], row[row > 0]))
                for row in probs
            ]
        )
    return float(np.std(values, ddof=1))


def simulate_rule(
    rm: RiskMapping,
    g: GainSpec,
    rule: StoppingRule,
    x0: float,
    cfg: MCConfig,
    *,
    threads: int | None = None,
) -> MCEstimate:
    """Risk value of g(X_tau) from the empirical law of simulated stopping positions.

    Results depend only on ``cfg`` and never on ``threads``: paths are
    simulated in blocks of ``cfg.block_size`` with one spawned Philox stream
    per block.
    """
    if not 0.0 <= x0 <= 1.0:
        raise InvalidArgumentError(f"x0 must lie in [0, 1], got {x0!r}")

    interval = rule.interval_from(x0)
    if interval is None:
        value = eval_discrete(rm, DiscreteLaw.point_mass(float(g(x0))))
        return MCEstimate(value, 0.0, 0, cfg.n_paths)

    a, b = interval
    sizes = [cfg.block_size] * (cfg.n_paths // cfg.block_size)
    if cfg.n_paths % cfg.block_size:
        sizes.append(cfg.n_paths % cfg.block_size)
    seeds = np.random.SeedSequence(cfg.seed).spawn(len(sizes))

    blocks = ordered_map(
        lambda job: _simulate_block(job[0], job[1], x0, a, b, cfg),
        list(zip(seeds, sizes, strict=True)),
        threads,
    )
    stopped = np.concatenate([blk.stopped_at for blk in blocks])
    n_capped = sum(blk.n_capped for blk in blocks)

    law = DiscreteLaw.empirical(g.evaluate(stopped))
    value = eval_discrete(rm, law)
    std_error = bootstrap_std_error(rm, law, cfg.n_paths, cfg.bootstrap, cfg.seed)

    if n_capped > CAP_WARN_FRACTION * cfg.n_paths:
        logger.warning("horizon_exhausted", capped=n_capped, n_paths=cfg.n_paths, t_max=cfg.t_max)
        warnings.warn(
            f"{n_capped} of {cfg.n_paths} paths reached t_max={cfg.t_max}",
            HorizonExhaustedWarning,
            stacklevel=2,
        )
    logger.debug(
        "rule_simulated",
        rule=rule.describe(),
        x0=x0,
        value=value,
        std_error=std_error,
        atoms=len(law),
    )
    return MCEstimate(value, std_error, n_capped, cfg.n_paths)
