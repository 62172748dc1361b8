"""Direct search for the majorant w(x) = inf{h(x) : h in H, h >= g}.

For fixed (y, z) an h-function is nondecreasing in each payoff, so among
dominating functions with a given free payoff the pointwise smallest one has
the other payoff on the domination frontier: the least value keeping h >= g
at every grid point of [y, z]. Candidates therefore run over a node grid of
the free payoff with the other one solved exactly, and the per-point winners
are refined by a step-halving pattern search along the same frontier.
"""

from __future__ import annotations

import time
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from nlstop.errors import InvalidArgumentError
from nlstop.grid import Grid
from nlstop.hfamily.functions import DEFAULT_TOL_DOM, ONE_SIDED_LEVEL, PAYOFF_CAP
from nlstop.hfamily.gain import GainSpec, g_bar
from nlstop.majorant.models import Family, MajorantResult
from nlstop.risk.base import RiskMapping
from nlstop.utils.logging import get_logger
from nlstop.utils.parallel import ordered_map, resolve_threads

logger = get_logger(__name__)

FloatArray = npt.NDArray[np.float64]
IntArray = npt.NDArray[np.int64]

MIN_PARAM_RES = 16
FREE_BETA = 0
FREE_GAMMA = 1
BLOCK_BATCH = 64


@dataclass(frozen=True, eq=False)
class _Block:
    """Best candidate per grid point of [points[start], points[stop]] for one (y, z)."""

    start: int
    stop: int
    family: Family
    values: FloatArray
    beta: FloatArray
    gamma: FloatArray
    axis: npt.NDArray[np.int8]
    n_candidates: int


@dataclass
class _Best:
    value: FloatArray
    i: IntArray
    j: IntArray
    beta: FloatArray
    gamma: FloatArray
    axis: npt.NDArray[np.int8]
    family: npt.NDArray[np.int8]

    @classmethod
    def empty(cls, n: int) -> _Best:
        return cls(
            value=np.full(n, np.inf),
            i=np.full(n, -1, dtype=np.int64),
            j=np.full(n, -1, dtype=np.int64),
            beta=np.full(n, np.nan),
            gamma=np.full(n, np.nan),
            axis=np.zeros(n, dtype=np.int8),
            family=np.zeros(n, dtype=np.int8),
        )

    def merge(self, blk: _Block) -> None:
        sl = slice(blk.start, blk.stop + 1)
        cur_v, cur_i, cur_j = self.value[sl], self.i[sl], self.j[sl]
        cur_b, cur_c = self.beta[sl], self.gamma[sl]
        # Ties on value go to the lexicographically smallest (y, z, beta, gamma).
        lex_less = (blk.start < cur_i) | (
            (blk.start == cur_i)
            & (
                (blk.stop < cur_j)
                | (
                    (blk.stop == cur_j)
                    & ((blk.beta < cur_b) | ((blk.beta == cur_b) & (blk.gamma < cur_c)))
                )
            )
        )
        better = (blk.values < cur_v) | ((blk.values == cur_v) & lex_less)
        idx = np.flatnonzero(better) + blk.start
        self.value[idx] = blk.values[better]
        self.i[idx] = blk.start
        self.j[idx] = blk.stop
        self.beta[idx] = blk.beta[better]
        self.gamma[idx] = blk.gamma[better]
        self.axis[idx] = blk.axis[better]
        self.family[idx] = blk.family


class _Search:
    def __init__(
        self, rm: RiskMapping, grid: Grid, g_values: FloatArray, top: float, tol_dom: float
    ) -> None:
        self.rm = rm
        self.points = grid.points
        self.targets = g_values - tol_dom
        self.cap = top + PAYOFF_CAP
        self.level = top + ONE_SIDED_LEVEL

    def exit_probs(self, i: int, j: int) -> FloatArray:
        y, z = self.points[i], self.points[j]
        p = (z - self.points[i : j + 1]) / (z - y)
        p[0], p[-1] = 1.0, 0.0
        return p

    def frontier(
        self, i: int, j: int, free: int, nodes: FloatArray
    ) -> tuple[FloatArray, FloatArray]:
        """(beta, gamma) on the domination frontier for the given free-payoff nodes."""
        p = self.exit_probs(i, j)
        t = self.targets[i : j + 1]
        if free == FREE_BETA:
            gamma = self.rm.second_payoff_inverse(p[None, :], nodes[:, None], t[None, :], self.cap)
            return nodes, np.max(gamma, axis=1)
        # Law invariance: swapping the payoffs is swapping p and 1 - p.
        beta = self.rm.second_payoff_inverse(1.0 - p[None, :], nodes[:, None], t[None, :], self.cap)
        return np.max(beta, axis=1), nodes

    def h_rows(self, i: int, j: int, beta: FloatArray, gamma: FloatArray) -> FloatArray:
        p = self.exit_probs(i, j)
        h = self.rm.two_point(p[None, :], beta[:, None], gamma[:, None])
        h[:, 0] = beta
        h[:, -1] = gamma
        return h

    def h_at(self, i: int, j: int, k: int, beta: float, gamma: float) -> float:
        if k == i:
            return beta
        if k == j:
            return gamma
        p = (self.points[j] - self.points[k]) / (self.points[j] - self.points[i])
        return float(self.rm.two_point(p, beta, gamma))

    def block(
        self, i: int, j: int, family: Family, candidates: list[tuple[int, FloatArray]]
    ) -> _Block | None:
        betas, gammas, axes = [], [], []
        for free, nodes in candidates:
            b, c = self.frontier(i, j, free, nodes)
            betas.append(b)
            gammas.append(c)
            axes.append(np.full(nodes.size, free, dtype=np.int8))
        beta = np.concatenate(betas)
        gamma = np.concatenate(gammas)
        axis = np.concatenate(axes)

        feasible = np.isfinite(beta) & np.isfinite(gamma)
        if family is Family.RIGHT_ANCHORED:
            feasible &= beta > self.level
        elif family is Family.LEFT_ANCHORED:
            feasible &= gamma > self.level
        if not np.any(feasible):
            return None

        beta, gamma, axis = beta[feasible], gamma[feasible], axis[feasible]
        order = np.lexsort((gamma, beta))
        beta, gamma, axis = beta[order], gamma[order], axis[order]
        h = self.h_rows(i, j, beta, gamma)
        # argmin keeps the first minimiser, i.e. the smallest (beta, gamma).
        pick = np.argmin(h, axis=0)
        cols = np.arange(h.shape[1])
        return _Block(
            start=i,
            stop=j,
            family=family,
            values=h[pick, cols],
            beta=beta[pick],
            gamma=gamma[pick],
            axis=axis[pick],
            n_candidates=int(beta.size),
        )

    def refine(
        self, k: int, best: _Best, iterations: int, step: float
    ) -> tuple[float, float, float]:
        """Pattern search over the free payoff for grid point k, other payoff on the frontier."""
        i, j = int(best.i[k]), int(best.j[k])
        free = int(best.axis[k])
        family = Family(int(best.family[k]))
        lo = 0.0 if family is Family.FULL else self.level

        def objective(t: float) -> tuple[float, float, float]:
            if t > self.cap or t < lo or (family is not Family.FULL and t <= lo):
                return np.inf, np.nan, np.nan
            b, c = self.frontier(i, j, free, np.array([t]))
            beta, gamma = float(b[0]), float(c[0])
            if not (np.isfinite(beta) and np.isfinite(gamma)):
                return np.inf, np.nan, np.nan
            return self.h_at(i, j, k, beta, gamma), beta, gamma

        value, beta, gamma = float(best.value[k]), float(best.beta[k]), float(best.gamma[k])
        t = beta if free == FREE_BETA else gamma
        for _ in range(iterations):
            for trial in (t + step, t - step):
                v, b, c = objective(trial)
                if v < value:
                    value, beta, gamma, t = v, b, c, trial
                    break
            else:
                step *= 0.5
        return value, beta, gamma


def _batched(items: list[tuple[int, int]], size: int) -> Iterable[list[tuple[int, int]]]:
    for start in range(0, len(items), size):
        yield items[start : start + size]


def compute_majorant(
    rm: RiskMapping,
    g: GainSpec,
    grid: Grid,
    res: int = 64,
    *,
    refine_iterations: int = 40,
    tol_dom: float = DEFAULT_TOL_DOM,
    threads: int | None = None,
) -> MajorantResult:
    """Pointwise infimum of the dominating members of H on ``grid``.

    The result is identical for any ``threads``: every merge resolves ties by
    the lexicographic order of (y, z, beta, gamma).
    """
    if res < MIN_PARAM_RES:
        raise InvalidArgumentError(f"param_res must be >= {MIN_PARAM_RES}, got {res}")
    if refine_iterations < 0:
        raise InvalidArgumentError(f"refine_iterations must be >= 0, got {refine_iterations}")

    gv = g.on_grid(grid)
    top = g_bar(g, grid)
    search = _Search(rm, grid, gv, top, tol_dom)
    n = len(grid)
    best = _Best.empty(n)

    full_nodes = np.linspace(0.0, search.cap, res)
    one_sided_nodes = np.linspace(search.level, search.cap, res)[1:]

    started = time.perf_counter()
    full = search.block(
        0,
        n - 1,
        Family.FULL,
        [
            (FREE_BETA, np.union1d(full_nodes, [top, gv[0]])),
            (FREE_GAMMA, np.union1d(full_nodes, [top, gv[-1]])),
        ],
    )
    if full is not None:
        best.merge(full)
    logger.info(
        "majorant_class_done",
        family=Family.FULL.name.lower(),
        candidates=0 if full is None else full.n_candidates,
        seconds=round(time.perf_counter() - started, 3),
    )

    specs = {
        Family.RIGHT_ANCHORED: ([(i, n - 1) for i in range(1, n - 1)], FREE_BETA),
        Family.LEFT_ANCHORED: ([(0, j) for j in range(1, n - 1)], FREE_GAMMA),
    }
    for family, (pairs, free) in specs.items():
        started = time.perf_counter()
        candidates = 0

        def run(pair: tuple[int, int], family: Family = family, free: int = free) -> _Block | None:
            return search.block(pair[0], pair[1], family, [(free, one_sided_nodes)])

        for batch in _batched(pairs, BLOCK_BATCH * resolve_threads(threads)):
            for blk in ordered_map(run, batch, threads):
                if blk is not None:
                    best.merge(blk)
                    candidates += blk.n_candidates
        logger.info(
            "majorant_class_done",
            family=family.name.lower(),
            candidates=candidates,
            seconds=round(time.perf_counter() - started, 3),
        )

    if refine_iterations > 0:
        started = time.perf_counter()
        full_step = search.cap / (res - 1)
        side_step = (search.cap - search.level) / (res - 1)

        def refine_point(k: int) -> tuple[float, float, float]:
            step = full_step if best.family[k] == Family.FULL else side_step
            return search.refine(k, best, refine_iterations, step)

        refined = ordered_map(refine_point, range(n), threads)
        for k, (value, beta, gamma) in enumerate(refined):
            if value < best.value[k]:
                best.value[k], best.beta[k], best.gamma[k] = value, beta, gamma
        logger.info(
            "majorant_refined",
            iterations=refine_iterations,
            seconds=round(time.perf_counter() - started, 3),
        )

    pts = grid.points
    return MajorantResult(
        grid=grid,
        g_values=gv,
        w_values=best.value,
        y=pts[best.i],
        z=pts[best.j],
        beta=best.beta,
        gamma=best.gamma,
        family=best.family,
        g_bar=top,
    )
