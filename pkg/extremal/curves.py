"""Closed-form extremal quantities for triangle minimization.

For an edge density ``a`` the extremal graphs are complete (t+1)-partite with
t parts of relative size ``c`` and one smaller part. Everything here is a
float function of ``a`` (and of t and c derived from it).
"""

import logging
import math
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Dict, Mapping, Sequence

import numpy as np
from scipy.optimize import bisect

from core.config import CURVE_TOLERANCE, DERIVATIVE_TOLERANCE, NUMERIC_TOLERANCE
from core.errors import DomainError, PreconditionError

logger = logging.getLogger(__name__)

# a = 1 - 1/s is computed in floating point; absorb the rounding
_BOUNDARY_SLACK = 1e-9


def _check_density(a: float, allow_one: bool = False):
    upper_ok = a <= 1 if allow_one else a < 1
    if not (0 <= a and upper_ok):
        bound = "[0, 1]" if allow_one else "[0, 1)"
        raise DomainError(f"Edge density must lie in {bound}, got {a}")


def t_of(a: float) -> int:
    """Integer t with a in [1 - 1/t, 1 - 1/(t+1)); the boundary a = 1 - 1/s gives t = s."""
    _check_density(a)
    return int(math.floor(1.0 / (1.0 - a) + _BOUNDARY_SLACK))


def c_from_t(a: float, t: int) -> float:
    return (t + math.sqrt(max(0.0, t * (t - a * (t + 1))))) / (t * (t + 1))


def c_of(a: float) -> float:
    """Relative size of each of the t large parts."""
    return c_from_t(a, t_of(a))


def c_residual(a: float) -> float:
    """Residual of 2(C(t,2)c^2 + tc(1 - tc)) = a."""
    t, c = t_of(a), c_of(a)
    return 2 * (comb(t, 2) * c * c + t * c * (1 - t * c)) - a


def h_r(a: float, r: int) -> float:
    """Limiting K_r density of the extremal family at edge density a."""
    _check_density(a, allow_one=True)
    if r < 1:
        raise DomainError(f"Clique order must be positive, got {r}")
    if a == 1:
        return 1.0
    t, c = t_of(a), c_of(a)
    return factorial(r) * (comb(t, r) * c ** r + comb(t, r - 1) * c ** (r - 1) * (1 - t * c))


def h3(a: float) -> float:
    """Minimum limiting triangle density at edge density a."""
    return h_r(a, 3)


def h_t_explicit(x: float, t: int) -> float:
    """Triangle density of the t-segment written out in radicals."""
    root = math.sqrt(max(0.0, t * (t - x * (t + 1))))
    return (t - 1) * (t - 2 * root) * (t + root) ** 2 / (t * t * (t + 1) ** 2)


def goodman_bound(r: int, m: float, n: int) -> float:
    """Lower bound on the K_r count of any graph with n vertices and m edges."""
    if n <= 0:
        return 0.0
    if not 0 <= m <= comb(n, 2):
        raise DomainError(f"Edge count {m} outside [0, {comb(n, 2)}]")
    t = 1.0 / (1.0 - 2.0 * m / (n * n))
    if t < r - 1:
        return 0.0
    falling = 1.0
    for i in range(r):
        falling *= t - i
    return falling / factorial(r) * (n / t) ** r


def goodman_density(a: float) -> float:
    """Goodman's triangle-density lower bound (1 - 1/t')(1 - 2/t') with t' = 1/(1 - a), floored at 0."""
    _check_density(a)
    inverse = 1.0 - a
    return max(0.0, (1.0 - inverse) * (1.0 - 2.0 * inverse))


def link_edge_density(z: float, mu: float) -> float:
    """Edge density of a vertex neighbourhood given the normalized degree z."""
    if z <= 0:
        raise DomainError(f"Normalized degree must be positive, got {z}")
    return (z - mu) / (z * z)


@dataclass(frozen=True)
class ExtremalParams:
    a: float
    t: int
    c: float
    b: float
    hprime: float
    A: float
    B: float
    mu: float
    eta: Dict[int, float] = field(default_factory=dict, hash=False)

    @property
    def degree_window(self):
        """Admissible range of the vertex edge density."""
        return self.B / self.A, 2 * self.B / self.A


def solve_eta(s: int, mu: float) -> float:
    """Root of (eta - mu)/eta^2 = 1 - 1/s in [mu, 2mu]."""
    target = 1.0 - 1.0 / s
    if target == 0:
        return mu

    def gap(z):
        return link_edge_density(z, mu) - target

    if gap(2 * mu) < 0:
        raise DomainError(f"No root for s={s} in [{mu}, {2 * mu}]")
    return bisect(gap, mu, 2 * mu, xtol=CURVE_TOLERANCE * 1e-3, maxiter=200)


def params(a: float) -> ExtremalParams:
    """Scalar bundle for the extremal case b = h3(a).

    Raises:
        DomainError: when t = 1, where every quantity degenerates
    """
    t = t_of(a)
    if t < 2:
        raise DomainError(f"Edge density {a} gives t = 1; parameters are degenerate")
    c = c_of(a)
    b = h3(a)
    hprime = 3 * (t - 1) * c
    A = 2 * (t - 1) * c
    B = A * a - b
    mu = B / (A * A)
    eta = {s: solve_eta(s, mu) for s in range(1, t)}
    return ExtremalParams(a=a, t=t, c=c, b=b, hprime=hprime, A=A, B=B, mu=mu, eta=eta)


def k41_lower_bound(p: ExtremalParams, x: float) -> float:
    """Lower bound on the K_4 density at a vertex of edge density x; linear in x."""
    low, high = p.degree_window
    if not low - NUMERIC_TOLERANCE <= x <= high + NUMERIC_TOLERANCE:
        logger.warning(f"Vertex density {x} outside [{low}, {high}]; bound may be vacuous")
    eta = p.eta[p.t - 1]
    t = p.t
    return p.A ** 3 * (
        1.5 * (1 - 2 * p.mu) * (x / p.A - eta) + eta ** 3 * (t - 2) * (t - 3) / (t - 1) ** 2
    )


def bound_36(a: float, k4: float, k13bar: float) -> float:
    """Triangle-density lower bound from K_4 and anti-claw densities."""
    for name, value in (("a", a), ("k4", k4), ("k13bar", k13bar)):
        if not 0 <= value <= 1:
            raise DomainError(f"{name} must lie in [0, 1], got {value}")
    t = t_of(a)
    hprime = 3 * (t - 1) * c_from_t(a, t)
    denominator = hprime + 3 * a - 2
    if denominator <= 0:
        raise DomainError(f"Denominator {denominator} is not positive at a={a}")
    return (a * (2 * a - 1) * hprime + k4 + 0.25 * k13bar) / denominator


def clique_vector(a: float, r_max: int) -> Dict[int, float]:
    """Densities of K_1..K_{r_max} in the extremal limit, with K_1 = 1 and K_2 = a."""
    vec = {1: 1.0, 2: a}
    for r in range(3, r_max + 1):
        vec[r] = h_r(a, r)
    return vec


def kr_recursion_residual(vec: Mapping[int, float], t: int, c: float, r: int) -> float:
    """vec[r] - 2(t-r+2)c vec[r-1] + (t-r+3)(t-r+2)c^2 vec[r-2]."""
    missing = [k for k in (r, r - 1, r - 2) if k not in vec]
    if missing:
        raise PreconditionError(f"Clique densities missing for orders {missing}")
    return vec[r] - 2 * (t - r + 2) * c * vec[r - 1] + (t - r + 3) * (t - r + 2) * c * c * vec[r - 2]


def curve_row(a: float) -> Dict[str, float]:
    """One row of the extremal curve table."""
    t, c = t_of(a), c_of(a)
    A = 2 * (t - 1) * c
    b = h3(a)
    B = A * a - b
    return {
        "a": a,
        "t": t,
        "c": c,
        "h3": b,
        "h4": h_r(a, 4),
        "h5": h_r(a, 5),
        "goodman": goodman_density(a),
        "A": A,
        "B": B,
        "mu": B / (A * A) if A else float("nan"),
    }


def curve_table(start: float, stop: float, steps: int) -> list:
    if steps < 1:
        raise DomainError(f"Need at least one grid point, got {steps}")
    return [curve_row(float(a)) for a in np.linspace(start, stop, steps)]


def curve_checks(grid: Sequence[float], step: float = 1e-6, margin: float = 1e-4) -> Dict[str, float]:
    """Worst residuals of the curve identities over ``grid``.

    Keys: c_residual, explicit_gap, derivative_gap, link_max_gap, c_range_violations.
    """
    worst = {"c_residual": 0.0, "explicit_gap": 0.0, "derivative_gap": 0.0, "link_max_gap": 0.0,
             "c_range_violations": 0}
    for a in grid:
        t, c = t_of(a), c_of(a)
        worst["c_residual"] = max(worst["c_residual"], abs(c_residual(a)))
        if not 1 / (t + 1) - CURVE_TOLERANCE <= c <= 1 / t + CURVE_TOLERANCE:
            worst["c_range_violations"] += 1
        worst["explicit_gap"] = max(worst["explicit_gap"], abs(h_t_explicit(a, t) - h3(a)))
        lower, upper = 1 - 1 / t, 1 - 1 / (t + 1)
        # the difference quotient blows up at segment ends
        if not lower + margin < a < upper - margin:
            continue
        slope = (h_t_explicit(a + step, t) - h_t_explicit(a - step, t)) / (2 * step)
        worst["derivative_gap"] = max(worst["derivative_gap"], abs(slope - 3 * (t - 1) * c))
        if t >= 2:
            p = params(a)
            zs = np.linspace(p.mu, 2 * p.mu, 2001)
            peak = max(link_edge_density(float(z), p.mu) for z in zs)
            worst["link_max_gap"] = max(worst["link_max_gap"], abs(peak - (1 - 1 / t)))
    logger.debug(f"Curve checks over {len(grid)} points: {worst}")
    return worst


def curve_checks_pass(worst: Mapping[str, float]) -> bool:
    return (
        worst["c_residual"] < CURVE_TOLERANCE
        and worst["explicit_gap"] < CURVE_TOLERANCE
        and worst["derivative_gap"] < DERIVATIVE_TOLERANCE
        and worst["link_max_gap"] < NUMERIC_TOLERANCE
        and worst["c_range_violations"] == 0
    )
