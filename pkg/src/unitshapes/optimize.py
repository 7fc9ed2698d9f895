"""Derivative-free minimization of family measures, plus grid scans.

1D families use golden-section search on a bracket; 2D families use
Nelder-Mead restarted from a fixed seed list, with +inf as the out-of-domain
penalty (the triangle-friendly region is open and the objective blows up at
its boundary, so penalties are the natural constraint handling).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import catalog
from .catalog import (
    Ellipse,
    Parallelogram,
    Rectangle,
    Rhombus,
    RightTriangle,
    Triangle,
    fundamental_measure,
)
from .errors import DomainError, NotConverged

_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0

# name -> (constructor from the bare parameter(s), default search region)
FAMILIES_1D: dict[str, tuple[Callable[[float], object], tuple[float, float]]] = {
    "right_triangle": (RightTriangle, (1e-6, math.pi / 2.0 - 1e-6)),
    "rectangle": (Rectangle, (0.01, 100.0)),
    "rhombus": (Rhombus, (0.01, math.pi - 0.01)),
    "ellipse": (Ellipse, (0.01, 0.99)),
}

FAMILIES_2D: dict[str, dict] = {
    "triangle": {
        "make": lambda x: Triangle(x[0], x[1]),
        "seeds": [(1.0, 1.0), (0.9, 0.9), (0.75, 0.95), (0.95, 0.75), (0.8, 0.85)],
        "step": 0.05,
    },
    "parallelogram": {
        "make": lambda x: Parallelogram(x[0], x[1]),
        "seeds": [
            (math.pi / 2.0, 1.0),
            (1.0, 0.5),
            (2.0, 2.0),
            (0.6, 1.5),
            (2.4, 0.8),
        ],
        "step": 0.1,
    },
}


@dataclass(frozen=True)
class MinimizationResult:
    argmin: tuple[float, ...]
    min_value: float
    iterations: int
    converged: bool
    boundary_infimum: float | None = None

    def to_dict(self) -> dict:
        d = {
            "argmin": list(self.argmin),
            "min_value": self.min_value,
            "iterations": self.iterations,
            "converged": self.converged,
        }
        if self.boundary_infimum is not None:
            d["boundary_infimum"] = self.boundary_infimum
        return d


def golden_section(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tol: float = 1e-10,
    max_iter: int = 200,
) -> tuple[float, float, int]:
    """Minimize a unimodal function on [lo, hi] to parameter tolerance tol.

    Returns (argmin, value, iterations). Only interior points are evaluated,
    so open-domain endpoints are safe bracket bounds.
    """
    a, b = (lo, hi) if lo < hi else (hi, lo)
    h = b - a
    c = b - _GOLDEN * h
    d = a + _GOLDEN * h
    fc, fd = f(c), f(d)
    iterations = 0
    while h > tol:
        if iterations >= max_iter:
            raise NotConverged(
                f"golden-section interval still {h:.3e} wide after {max_iter} iterations"
            )
        iterations += 1
        if fc < fd:
            b, d, fd = d, c, fc
            h = b - a
            c = b - _GOLDEN * h
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            h = b - a
            d = a + _GOLDEN * h
            fd = f(d)
    x = c if fc < fd else d
    fx = fc if fc < fd else fd
    return x, fx, iterations


def nelder_mead(
    f: Callable[[Sequence[float]], float],
    start: Sequence[float],
    step: float = 0.1,
    tol: float = 1e-8,
    max_iter: int = 1000,
) -> tuple[tuple[float, ...], float, int, bool]:
    """Minimize f over R^n; f may return +inf as an out-of-domain penalty.

    Returns (argmin, value, iterations, converged) where convergence means
    the simplex diameter dropped below tol.
    """
    n = len(start)
    simplex = [tuple(start)]
    for i in range(n):
        for direction in (1.0, -1.0):
            cand = list(start)
            cand[i] += direction * step
            if math.isfinite(f(cand)):
                simplex.append(tuple(cand))
                break
        else:
            cand = list(start)
            cand[i] += step
            simplex.append(tuple(cand))
    values = [f(x) for x in simplex]

    alpha, gamma, beta, delta = 1.0, 2.0, 0.5, 0.5
    iterations = 0
    while iterations < max_iter:
        order = sorted(range(n + 1), key=lambda i: values[i])
        simplex = [simplex[i] for i in order]
        values = [values[i] for i in order]
        diameter = max(
            math.dist(simplex[0], simplex[i]) for i in range(1, n + 1)
        )
        if diameter <= tol:
            return simplex[0], values[0], iterations, True
        iterations += 1

        centroid = tuple(
            sum(simplex[i][k] for i in range(n)) / n for k in range(n)
        )
        worst = simplex[-1]
        reflected = tuple(centroid[k] + alpha * (centroid[k] - worst[k]) for k in range(n))
        fr = f(reflected)
        if values[0] <= fr < values[-2]:
            simplex[-1], values[-1] = reflected, fr
            continue
        if fr < values[0]:
            expanded = tuple(centroid[k] + gamma * (centroid[k] - worst[k]) for k in range(n))
            fe = f(expanded)
            if fe < fr:
                simplex[-1], values[-1] = expanded, fe
            else:
                simplex[-1], values[-1] = reflected, fr
            continue
        contracted = tuple(centroid[k] + beta * (worst[k] - centroid[k]) for k in range(n))
        fc = f(contracted)
        if fc < values[-1]:
            simplex[-1], values[-1] = contracted, fc
            continue
        best = simplex[0]
        simplex = [
            best,
            *(
                tuple(best[k] + delta * (x[k] - best[k]) for k in range(n))
                for x in simplex[1:]
            ),
        ]
        values = [values[0], *(f(x) for x in simplex[1:])]

    return simplex[0], values[0], iterations, False


def _penalized(make: Callable) -> Callable[[Sequence[float]], float]:
    def objective(x: Sequence[float]) -> float:
        try:
            return fundamental_measure(make(x))
        except DomainError:
            return math.inf

    return objective


def minimize_1d(
    family: str,
    bracket: tuple[float, float] | None = None,
    tol: float = 1e-10,
    max_iter: int = 200,
) -> MinimizationResult:
    """Golden-section minimum of a one-parameter family's measure."""
    name = family.replace("-", "_")
    if name not in FAMILIES_1D:
        raise DomainError(
            f"no one-parameter family named {family!r}; choose from {sorted(FAMILIES_1D)}"
        )
    make, default_bracket = FAMILIES_1D[name]
    lo, hi = bracket if bracket is not None else default_bracket
    if not lo < hi:
        raise DomainError(f"empty bracket ({lo}, {hi})")

    x, fx, iterations = golden_section(
        lambda t: fundamental_measure(make(t)), lo, hi, tol=tol, max_iter=max_iter
    )
    edge = 10.0 * max(tol, 1e-12 * (hi - lo))
    interior = (x - lo > edge) and (hi - x > edge)
    boundary_inf = None
    if not interior and name == "ellipse" and hi - x <= edge:
        # The measure decreases toward the circle limit; there is no interior
        # minimizer, only the infimum pi on the boundary.
        boundary_inf = math.pi
    return MinimizationResult((x,), fx, iterations, interior, boundary_inf)


def minimize_2d(
    family: str,
    tol: float = 1e-8,
    max_iter: int = 1000,
) -> MinimizationResult:
    """Best Nelder-Mead result over the family's fixed restart seeds."""
    name = family.replace("-", "_")
    if name not in FAMILIES_2D:
        raise DomainError(
            f"no two-parameter family named {family!r}; choose from {sorted(FAMILIES_2D)}"
        )
    config = FAMILIES_2D[name]
    objective = _penalized(config["make"])

    best: tuple[tuple[float, ...], float, int, bool] | None = None
    total_iterations = 0
    for seed in config["seeds"]:
        x, fx, iters, converged = nelder_mead(
            objective, seed, step=config["step"], tol=tol, max_iter=max_iter
        )
        total_iterations += iters
        if best is None or fx < best[1]:
            best = (x, fx, iters, converged)
    assert best is not None
    if not best[3]:
        raise NotConverged(f"no Nelder-Mead restart met tolerance {tol} for {family!r}")
    return MinimizationResult(best[0], best[1], total_iterations, best[3])


SCAN_QUANTITIES = ("Pi", "a", "h")


@dataclass
class ScanResult:
    family: str
    quantity: str
    params: list[float]
    values: list[float]
    monotone_runs: list[tuple[float, float, str]] = field(default_factory=list)
    minimum: tuple[float, float] | None = None
    maximum: tuple[float, float] | None = None

    @property
    def endpoint_values(self) -> tuple[float, float]:
        return self.values[0], self.values[-1]

    def rows(self) -> list[tuple[float, float]]:
        return list(zip(self.params, self.values))


def scan(family: str, quantity: str, lo: float, hi: float, n: int) -> ScanResult:
    """Evaluate a family quantity on a uniform grid and describe its shape.

    Quantities: "Pi" (the fundamental measure, any family), "a" (unit-ellipse
    semi-minor axis, ellipse only), "h" (unit-rhombus shortest diagonal,
    rhombus only).
    """
    if n < 2:
        raise DomainError(f"scan needs at least two grid points, got {n}")
    if quantity not in SCAN_QUANTITIES:
        raise DomainError(f"unknown scan quantity {quantity!r}; choose from {SCAN_QUANTITIES}")
    name = family.replace("-", "_")

    if quantity == "a":
        if name != "ellipse":
            raise DomainError("quantity 'a' is defined for the ellipse family only")
        evaluate = catalog.ellipse_semi_minor
    elif quantity == "h":
        if name != "rhombus":
            raise DomainError("quantity 'h' is defined for the rhombus family only")
        evaluate = catalog.rhombus_short_diagonal
    else:
        if name in FAMILIES_1D:
            make = FAMILIES_1D[name][0]
        elif name in catalog.FAMILY_BY_NAME and name not in ("triangle", "parallelogram"):
            make = catalog.FAMILY_BY_NAME[name]
        else:
            raise DomainError(f"scan needs a one-parameter family, got {family!r}")
        evaluate = lambda t: fundamental_measure(make(t))

    params = [lo + (hi - lo) * i / (n - 1) for i in range(n)]
    params[-1] = hi
    values = [evaluate(t) for t in params]

    result = ScanResult(name, quantity, params, values)
    run_start = 0
    direction = ""
    for i in range(1, n):
        step = "increasing" if values[i] > values[i - 1] else (
            "decreasing" if values[i] < values[i - 1] else "flat"
        )
        if direction == "":
            direction = step
        elif step != direction:
            result.monotone_runs.append((params[run_start], params[i - 1], direction))
            run_start = i - 1
            direction = step
    result.monotone_runs.append((params[run_start], params[-1], direction))

    i_min = min(range(n), key=values.__getitem__)
    i_max = max(range(n), key=values.__getitem__)
    result.minimum = (params[i_min], values[i_min])
    result.maximum = (params[i_max], values[i_max])
    return result
