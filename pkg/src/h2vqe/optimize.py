"""Nelder-Mead simplex minimization, written for general dimension.

The variational problems here are one-dimensional, where the simplex is an
interval of two points, but nothing below assumes that.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

DEFAULT_STARTS = (-math.pi / 4, 0.0, math.pi / 4)


class ObjectiveError(ArithmeticError):
    """The objective returned a non-finite value."""

    def __init__(self, point, value):
        self.point = point
        self.value = value
        super().__init__(f"objective returned {value!r} at {point!r}")


@dataclass(frozen=True)
class NelderMeadConfig:
    initial_point: float | Sequence[float] = 0.0
    initial_step: float = 0.1
    reflection: float = 1.0
    expansion: float = 2.0
    contraction: float = 0.5
    shrink: float = 0.5
    f_tolerance: float = 1e-10
    x_tolerance: float = 1e-10
    max_evaluations: int = 500

    def __post_init__(self):
        if not self.reflection > 0:
            raise ValueError("reflection must be > 0")
        if not self.expansion > 1:
            raise ValueError("expansion must be > 1")
        if not 0 < self.contraction < 1:
            raise ValueError("contraction must be in (0, 1)")
        if not 0 < self.shrink < 1:
            raise ValueError("shrink must be in (0, 1)")
        if not (self.f_tolerance > 0 and self.x_tolerance > 0):
            raise ValueError("tolerances must be positive")
        if self.initial_step == 0:
            raise ValueError("initial_step must be non-zero")
        if self.max_evaluations < 1:
            raise ValueError("max_evaluations must be >= 1")

    def at(self, start) -> "NelderMeadConfig":
        return NelderMeadConfig(
            start, self.initial_step, self.reflection, self.expansion,
            self.contraction, self.shrink, self.f_tolerance, self.x_tolerance,
            self.max_evaluations,
        )


@dataclass(frozen=True)
class OptimizationResult:
    best_point: float | np.ndarray
    best_value: float
    evaluations: int
    converged: bool
    # best simplex value after each iteration
    history: tuple[float, ...] = field(default=(), repr=False)


def minimize(f: Callable, cfg: NelderMeadConfig = NelderMeadConfig()) -> OptimizationResult:
    """Minimize ``f`` from ``cfg.initial_point``.

    A scalar initial point means a scalar problem: ``f`` receives and
    ``best_point`` is a float. Convergence requires the spread of simplex
    values below ``f_tolerance`` and the simplex width below ``x_tolerance``.
    """
    scalar = np.ndim(cfg.initial_point) == 0
    x0 = np.atleast_1d(np.asarray(cfg.initial_point, dtype=float))
    n = x0.size
    evals = 0

    def call(x):
        nonlocal evals
        evals += 1
        arg = float(x[0]) if scalar else x.copy()
        v = f(arg)
        try:
            v = float(v)
        except (TypeError, ValueError):
            raise ObjectiveError(arg, v) from None
        if not math.isfinite(v):
            raise ObjectiveError(arg, v)
        return v

    simplex = [x0]
    values = [call(x0)]
    for i in range(n):
        if evals >= cfg.max_evaluations:
            break
        x = x0.copy()
        x[i] += cfg.initial_step
        simplex.append(x)
        values.append(call(x))

    def finish(converged):
        k = int(np.argmin(values))
        best = simplex[k]
        return OptimizationResult(
            float(best[0]) if scalar else best.copy(),
            values[k],
            evals,
            converged,
            tuple(history),
        )

    history: list[float] = []
    if len(simplex) < n + 1:
        return finish(False)

    a, g, rho, sigma = cfg.reflection, cfg.expansion, cfg.contraction, cfg.shrink
    while True:
        order = np.argsort(values, kind="stable")
        simplex = [simplex[k] for k in order]
        values = [values[k] for k in order]
        history.append(values[0])

        f_spread = values[-1] - values[0]
        width = max(float(np.max(np.abs(x - simplex[0]))) for x in simplex[1:])
        if f_spread < cfg.f_tolerance and width < cfg.x_tolerance:
            return finish(True)
        if evals >= cfg.max_evaluations:
            return finish(False)

        centroid = np.mean(simplex[:-1], axis=0)
        worst = simplex[-1]
        xr = centroid + a * (centroid - worst)
        fr = call(xr)
        if fr < values[0]:
            if evals >= cfg.max_evaluations:
                simplex[-1], values[-1] = xr, fr
                continue
            xe = centroid + g * (xr - centroid)
            fe = call(xe)
            simplex[-1], values[-1] = (xe, fe) if fe < fr else (xr, fr)
            continue
        if fr < values[-2]:
            simplex[-1], values[-1] = xr, fr
            continue
        if evals >= cfg.max_evaluations:
            continue
        if fr < values[-1]:
            xc = centroid + rho * (xr - centroid)
            fc = call(xc)
            accept = fc <= fr
        else:
            xc = centroid + rho * (worst - centroid)
            fc = call(xc)
            accept = fc < values[-1]
        if accept:
            simplex[-1], values[-1] = xc, fc
            continue
        for k in range(1, len(simplex)):
            if evals >= cfg.max_evaluations:
                break
            simplex[k] = simplex[0] + sigma * (simplex[k] - simplex[0])
            values[k] = call(simplex[k])


def minimize_multistart(
    f: Callable,
    cfg: NelderMeadConfig = NelderMeadConfig(),
    starts: Sequence = DEFAULT_STARTS,
) -> OptimizationResult:
    """Run :func:`minimize` from each start and keep the lowest result.

    ``evaluations`` is the total over all runs; ``converged`` describes the
    winning run.
    """
    starts = list(starts)
    if not starts:
        raise ValueError("need at least one start")
    results = [minimize(f, cfg.at(s)) for s in starts]
    best = min(results, key=lambda r: r.best_value)
    total = sum(r.evaluations for r in results)
    return OptimizationResult(best.best_point, best.best_value, total, best.converged, best.history)
