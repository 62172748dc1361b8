"""Gain functions g: [0, 1] -> [0, inf) and their text grammar.

Accepted forms::

    poly:c0,c1,...           c0 + c1 x + c2 x^2 + ...
    sin:a,b,c,d              a + b sin(c pi x + d)
    pwl:x0:y0,x1:y1,...      piecewise linear through the knots, x0 = 0, last x = 1
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np
import numpy.typing as npt
from numpy.polynomial import polynomial as npoly
from scipy.optimize import minimize_scalar

from nlstop.errors import DerivativeUnavailableError, GainSpecError
from nlstop.grid import Grid

FloatArray = npt.NDArray[np.float64]

NEGATIVITY_SLACK = 1e-12


class GainKind(str, Enum):
    POLYNOMIAL = "poly"
    SINUSOID = "sin"
    PIECEWISE_LINEAR = "pwl"


@dataclass(frozen=True)
class GainSpec:
    kind: GainKind
    parameters: tuple[float, ...]
    knots: tuple[tuple[float, float], ...] = ()
    text: str = ""

    @classmethod
    def polynomial(cls, *coefficients: float) -> GainSpec:
        if not coefficients:
            raise GainSpecError("polynomial gain needs at least one coefficient")
        text = "poly:" + ",".join(repr(float(c)) for c in coefficients)
        return cls(GainKind.POLYNOMIAL, tuple(float(c) for c in coefficients), text=text)

    @classmethod
    def sinusoid(cls, a: float, b: float, c: float, d: float) -> GainSpec:
        params = (float(a), float(b), float(c), float(d))
        return cls(GainKind.SINUSOID, params, text="sin:" + ",".join(map(repr, params)))

    @classmethod
    def piecewise_linear(cls, knots: list[tuple[float, float]]) -> GainSpec:
        if len(knots) < 2:
            raise GainSpecError(f"piecewise-linear gain needs >= 2 knots, got {len(knots)}")
        xs = [float(k[0]) for k in knots]
        if xs[0] != 0.0 or xs[-1] != 1.0:
            raise GainSpecError(f"knots must start at x=0 and end at x=1, got {xs[0]}..{xs[-1]}")
        if any(b <= a for a, b in zip(xs, xs[1:], strict=False)):
            raise GainSpecError(f"knot positions must be strictly increasing: {xs}")
        pts = tuple((float(x), float(y)) for x, y in knots)
        text = "pwl:" + ",".join(f"{x!r}:{y!r}" for x, y in pts)
        return cls(GainKind.PIECEWISE_LINEAR, (), knots=pts, text=text)

    @property
    def derivative_available(self) -> bool:
        return self.kind is not GainKind.PIECEWISE_LINEAR

    def __call__(self, x: float | FloatArray) -> float | FloatArray:
        out = self.evaluate(np.asarray(x, dtype=np.float64))
        return float(out) if np.ndim(out) == 0 else out

    def evaluate(self, x: FloatArray) -> FloatArray:
        if self.kind is GainKind.POLYNOMIAL:
            return np.asarray(npoly.polyval(x, self.parameters), dtype=np.float64)
        if self.kind is GainKind.SINUSOID:
            a, b, c, d = self.parameters
            return a + b * np.sin(c * np.pi * x + d)
        xs, ys = zip(*self.knots, strict=True)
        return np.interp(x, xs, ys)

    def derivative(self, x: float | FloatArray) -> float | FloatArray:
        x_arr = np.asarray(x, dtype=np.float64)
        if self.kind is GainKind.POLYNOMIAL:
            out = npoly.polyval(x_arr, npoly.polyder(self.parameters))
        elif self.kind is GainKind.SINUSOID:
            _, b, c, d = self.parameters
            out = b * c * np.pi * np.cos(c * np.pi * x_arr + d)
        else:
            raise DerivativeUnavailableError(
                f"gain '{self.text}' is piecewise linear and has no derivative"
            )
        out = np.asarray(out, dtype=np.float64)
        return float(out) if out.ndim == 0 else out

    def on_grid(self, grid: Grid) -> FloatArray:
        """Samples of g on ``grid``; raises if g is negative anywhere on it."""
        values = self.evaluate(grid.points)
        if not np.all(np.isfinite(values)):
            raise GainSpecError(f"gain '{self.text}' is not finite on the grid")
        worst = int(np.argmin(values))
        if values[worst] < -NEGATIVITY_SLACK:
            raise GainSpecError(
                f"gain '{self.text}' is negative: g({grid.points[worst]:.6g}) = {values[worst]:.6g}"
            )
        return values

    def __str__(self) -> str:
        return self.text or self.kind.value


def _parse_floats(body: str, text: str) -> list[float]:
    values = []
    for token in body.split(","):
        try:
            values.append(float(token))
        except ValueError:
            raise GainSpecError(f"bad number '{token}' in gain '{text}'") from None
    return values


def parse_gain(text: str) -> GainSpec:
    """Parse the ``poly:`` / ``sin:`` / ``pwl:`` gain grammar."""
    kind, sep, body = text.strip().partition(":")
    if not sep or not body:
        raise GainSpecError(f"gain '{text}' must look like kind:params (poly, sin or pwl)")

    if kind == GainKind.POLYNOMIAL.value:
        spec = GainSpec.polynomial(*_parse_floats(body, text))
    elif kind == GainKind.SINUSOID.value:
        values = _parse_floats(body, text)
        if len(values) != 4:
            raise GainSpecError(f"sin gain needs 4 numbers a,b,c,d, got {len(values)} in '{text}'")
        spec = GainSpec.sinusoid(*values)
    elif kind == GainKind.PIECEWISE_LINEAR.value:
        knots = []
        for token in body.split(","):
            x_str, colon, y_str = token.partition(":")
            if not colon:
                raise GainSpecError(f"bad knot '{token}' in gain '{text}', expected x:y")
            x_val, y_val = _parse_floats(f"{x_str},{y_str}", text)
            knots.append((x_val, y_val))
        spec = GainSpec.piecewise_linear(knots)
    else:
        raise GainSpecError(f"unknown gain kind '{kind}' in '{text}' (expected poly, sin or pwl)")

    return GainSpec(spec.kind, spec.parameters, spec.knots, text=text.strip())


def g_bar(g: GainSpec, grid: Grid) -> float:
    """Maximum of g on [0, 1].

    Starts from the grid maximum and refines it with a bounded scalar search
    between the neighbours of the grid argmax; piecewise-linear gains attain
    their maximum at a knot.
    """
    values = g.on_grid(grid)
    best = float(np.max(values))
    if g.kind is GainKind.PIECEWISE_LINEAR:
        return max(best, max(y for _, y in g.knots))

    i = int(np.argmax(values))
    lo = grid.points[max(i - 1, 0)]
    hi = grid.points[min(i + 1, len(grid) - 1)]
    res = minimize_scalar(
        lambda x: -float(g(x)), bounds=(lo, hi), method="bounded", options={"xatol": 1e-12}
    )
    return max(best, -float(res.fun))
