"""Minimize the triangle polynomial of a weighted complete multipartite limit.

Parts c_1..c_s carry the complete multipartite structure and c_0 is a slack
part that is itself complete. With sum(c) = 1 and
c_0^2/2 + sum_{i<j} c_i c_j = a/2 (indices from 0), the triangle density over 6 is
c_0^3/6 + (c_0^2/2)(1 - c_0) + sum_{i<j<h} c_i c_j c_h.
"""

import json
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np
from scipy.optimize import minimize

from core.config import DEFAULT_SEED, NUMERIC_TOLERANCE
from core.errors import DomainError
from extremal.curves import t_of

logger = logging.getLogger(__name__)

_FEASIBILITY = 1e-10
_POLISH_STEPS = 50


@dataclass
class RatioPoint:
    c0: float
    parts: List[float]
    objective: float

    @property
    def weights(self) -> List[float]:
        return [self.c0] + self.parts


def _e2(x: np.ndarray) -> float:
    total = x.sum()
    return float((total * total - (x * x).sum()) / 2)


def _e3(x: np.ndarray) -> float:
    p1, p2, p3 = x.sum(), (x * x).sum(), (x ** 3).sum()
    return float((p1 ** 3 - 3 * p1 * p2 + 2 * p3) / 6)


def objective(x: np.ndarray) -> float:
    """x = (c_0, c_1, ..., c_s)."""
    c0 = x[0]
    return float(c0 ** 3 / 6 + c0 * c0 / 2 * (1 - c0)) + _e3(x)


def _objective_grad(x: np.ndarray) -> np.ndarray:
    # d e3 / d x_i = e2 of the other entries
    total, squares = x.sum(), (x * x).sum()
    e2_without = ((total - x) ** 2 - (squares - x * x)) / 2
    grad = e2_without.copy()
    c0 = x[0]
    grad[0] += c0 * (1 - c0)
    return grad


def constraints(x: np.ndarray, a: float) -> np.ndarray:
    return np.array([x.sum() - 1.0, x[0] ** 2 / 2 + _e2(x) - a / 2])


def _jacobian(x: np.ndarray) -> np.ndarray:
    total = x.sum()
    quad = total - x
    quad[0] += x[0]
    return np.vstack([np.ones_like(x), quad])


def polish(x: np.ndarray, a: float, free: Optional[Sequence[int]] = None) -> np.ndarray:
    """Gauss-Newton projection onto the two equality constraints, moving only ``free`` coordinates.

    A coordinate sitting on a bound whose step points outward is held there and
    the step is re-solved on the remaining coordinates.
    """
    x = np.clip(np.array(x, dtype=float), 0.0, 1.0)
    idx = list(range(len(x))) if free is None else [int(i) for i in free]
    for _ in range(_POLISH_STEPS):
        residual = constraints(x, a)
        if np.max(np.abs(residual)) < _FEASIBILITY * 1e-3:
            break
        active = list(idx)
        step = np.zeros(0)
        while active:
            step, *_ = np.linalg.lstsq(_jacobian(x)[:, active], -residual, rcond=None)
            blocked = {i for i, d in zip(active, step) if (x[i] <= 0.0 and d < 0) or (x[i] >= 1.0 and d > 0)}
            if not blocked:
                break
            active = [i for i in active if i not in blocked]
        if not active:
            logger.debug(f"Polish stalled with every coordinate on a bound, residual {residual.tolist()}")
            break
        x[active] = np.clip(x[active] + step, 0.0, 1.0)
    return x


def _feasible(x: np.ndarray, a: float) -> bool:
    return bool(np.max(np.abs(constraints(x, a))) < _FEASIBILITY and x.min() >= -NUMERIC_TOLERANCE)


def _solve(a: float, s: int, free_slack: bool, start: np.ndarray) -> Optional[np.ndarray]:
    bounds = [(0.0, 1.0 if free_slack else 0.0)] + [(0.0, 1.0)] * s
    result = minimize(
        objective,
        start,
        jac=_objective_grad,
        method="SLSQP",
        bounds=bounds,
        constraints=[{"type": "eq", "fun": lambda x: constraints(x, a), "jac": _jacobian}],
        options={"ftol": 1e-15, "maxiter": 1000},
    )
    free = None if free_slack else list(range(1, s + 1))
    x = polish(result.x, a, free)
    if not free_slack:
        x[0] = 0.0
    return x if _feasible(x, a) else None


def _to_point(x: np.ndarray) -> RatioPoint:
    parts = sorted((float(v) for v in x[1:] if v > _FEASIBILITY), reverse=True)
    return RatioPoint(float(max(0.0, x[0])), parts, objective(x))


def minimize_ratios(a: float, starts: int = 8, seed: int = DEFAULT_SEED) -> RatioPoint:
    """Best point over s in {t, t+1, t+2} parts, with the slack part pinned to 0 or free.

    Raises:
        DomainError: if a lies outside [0, 1)
    """
    t = t_of(a)
    rng = np.random.default_rng(seed)
    best: Optional[np.ndarray] = None
    tried = feasible = 0
    for s in (t, t + 1, t + 2):
        for free_slack in (False, True):
            for _ in range(starts):
                start = rng.dirichlet(np.ones(s + 1))
                if not free_slack:
                    start[0] = 0.0
                    start /= start.sum()
                tried += 1
                x = _solve(a, s, free_slack, start)
                if x is None:
                    continue
                feasible += 1
                if best is None or objective(x) < objective(best):
                    best = x
    if best is None:
        raise DomainError(f"No feasible ratio vector found at a={a}")
    point = _to_point(best)
    logger.info(
        f"Ratio optimum at a={a}: {point.objective:.10f}",
        extra={'context': json.dumps({'c0': point.c0, 'parts': point.parts, 'tried': tried, 'feasible': feasible})}
    )
    return point


def perturbation_probe(point: RatioPoint, a: float, eps: float = 0.01) -> Dict[str, float]:
    """Objective increase after moving ``eps`` between every pair of parts and re-projecting.

    Keys are "i,j" for the pair that gained and lost ``eps``; only the other
    parts move during projection.
    """
    x = np.array(point.weights, dtype=float)
    if len(x) < 4:
        raise DomainError("Perturbation needs at least three parts besides the slack")
    base = objective(x)
    out: Dict[str, float] = {}
    for i in range(1, len(x)):
        for j in range(1, len(x)):
            if i == j or x[j] < eps:
                continue
            moved = x.copy()
            moved[i] += eps
            moved[j] -= eps
            others = [k for k in range(1, len(x)) if k not in (i, j)]
            moved = polish(moved, a, others)
            if not _feasible(moved, a):
                continue
            out[f"{i},{j}"] = objective(moved) - base
    return out
