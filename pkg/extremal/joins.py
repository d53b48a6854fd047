"""Joins and blow-ups of graph limits, and the extremal limits as density vectors.

A limit is represented by an evaluator: a function from a Graph to its
limiting induced density. Joins are evaluated by assigning the vertices of
the pattern to the parts of the join so that every pair split across two
parts is an edge.
"""

import json
import logging
import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import factorial
from typing import Callable, Dict, List, Optional, Sequence

from core.canonical import automorphism_count, canonical
from core.config import MAX_JOIN_ORDER, NUMERIC_TOLERANCE
from core.density import DensityVector
from core.enumeration import enumerate_graphs
from core.errors import DomainError, OrderLimitError, PreconditionError
from core.graph import Graph, bit_indices, complete_graph, is_triangle_free
from extremal.curves import c_of, h3, t_of
from extremal.family import multipartite_density, part_sizes
from flags.identities import ANTI_PATH, ANTI_PATH_EDGE, EDGE_ROOT, K3_EDGE, K3_ROOT, lc
from flags.operators import average, evaluate
from flags.types import TYPE_0, TYPE_1, TYPE_E

logger = logging.getLogger(__name__)

Evaluator = Callable[[Graph], float]


def zero_hom(f: Graph) -> float:
    """The limit of edgeless graphs."""
    return 1.0 if f.edge_count == 0 else 0.0


def _check_pattern(f: Graph):
    if f.order > MAX_JOIN_ORDER:
        raise OrderLimitError(f"Join evaluation supports patterns up to {MAX_JOIN_ORDER} vertices, got {f.order}")


def _check_weights(alphas: Sequence[float], count: int):
    if len(alphas) != count:
        raise DomainError(f"Got {len(alphas)} weights for {count} parts")
    if any(w < 0 for w in alphas) or abs(sum(alphas) - 1) > NUMERIC_TOLERANCE:
        raise DomainError(f"Weights must be non-negative and sum to 1, got {list(alphas)}")


def _assignments(f: Graph, k: int):
    """Vertex-to-part maps (as lists of part masks) with every cross pair an edge."""
    masks = [0] * k

    def place(v: int):
        if v == f.order:
            yield list(masks)
            return
        assigned = (1 << v) - 1
        for i in range(k):
            outside = assigned & ~masks[i]
            if outside & ~f.rows[v]:
                continue
            masks[i] |= 1 << v
            yield from place(v + 1)
            masks[i] &= ~(1 << v)

    yield from place(0)


def join_eval(phis: Sequence[Evaluator], alphas: Sequence[float], f: Graph) -> float:
    """Density of ``f`` in the join of ``phis`` with part weights ``alphas``.

    Each valid assignment contributes the product over parts of
    alpha^|V_i| * phi_i(F[V_i]) * aut(F[V_i]) / |V_i|!, and the sum is scaled by
    |V(F)|!/aut(F).
    """
    _check_pattern(f)
    _check_weights(alphas, len(phis))
    total = 0.0
    for masks in _assignments(f, len(phis)):
        term = 1.0
        for phi, alpha, mask in zip(phis, alphas, masks):
            if not mask:
                continue
            part = f.induced(bit_indices(mask))
            size = part.order
            term *= alpha ** size * phi(part) * automorphism_count(part) / factorial(size)
            if term == 0:
                break
        total += term
    return total * factorial(f.order) / automorphism_count(f)


def join_eval_literal(phis: Sequence[Evaluator], alphas: Sequence[float], f: Graph) -> float:
    """(1/aut F) times the sum over valid assignments of multinomial * prod alpha^|V_i| phi_i(F[V_i])."""
    _check_pattern(f)
    _check_weights(alphas, len(phis))
    total = 0.0
    for masks in _assignments(f, len(phis)):
        term = float(factorial(f.order))
        for phi, alpha, mask in zip(phis, alphas, masks):
            size = mask.bit_count()
            term /= factorial(size)
            if size:
                term *= alpha ** size * phi(f.induced(bit_indices(mask)))
        total += term
    return total / automorphism_count(f)


def blowup_limit(h: Graph, weights: Sequence[float], f: Graph) -> float:
    """Density of ``f`` in the weighted blow-up of ``h`` with independent classes."""
    _check_pattern(f)
    _check_weights(weights, h.order)
    image = [0] * f.order

    def extend(v: int) -> float:
        if v == f.order:
            return 1.0
        total = 0.0
        for x in range(h.order):
            if weights[x] == 0:
                continue
            ok = True
            for u in range(v):
                y = image[u]
                adjacent = f.rows[v] >> u & 1
                if x == y:
                    ok = not adjacent
                else:
                    ok = adjacent == (h.rows[x] >> y & 1)
                if not ok:
                    break
            if ok:
                image[v] = x
                total += weights[x] * extend(v + 1)
        return total

    return extend(0) * factorial(f.order) / automorphism_count(f)


def bipartite_limit(beta: float, f: Graph) -> float:
    """Limit of complete bipartite graphs with part ratios (beta, 1 - beta)."""
    if not 0 <= beta <= 1:
        raise DomainError(f"beta must lie in [0, 1], got {beta}")
    return join_eval([zero_hom, zero_hom], [beta, 1 - beta], f)


@dataclass
class JoinComparison:
    graph: Graph
    labeled: float
    literal: float
    blowup: float

    @property
    def literal_mismatch(self) -> bool:
        return abs(self.literal - self.blowup) > NUMERIC_TOLERANCE

    @property
    def labeled_mismatch(self) -> bool:
        return abs(self.labeled - self.blowup) > NUMERIC_TOLERANCE


def compare_join_forms(graphs: Sequence[Graph], alphas: Sequence[float] = (0.2, 0.3, 0.5)) -> List[JoinComparison]:
    """Both join normalizations against the blow-up of K_k, for joins of edgeless limits."""
    k = len(alphas)
    phis = [zero_hom] * k
    host = complete_graph(k)
    rows = []
    for g in graphs:
        rows.append(JoinComparison(g, join_eval(phis, alphas, g), join_eval_literal(phis, alphas, g),
                                   blowup_limit(host, alphas, g)))
    literal_bad = sum(r.literal_mismatch for r in rows)
    if literal_bad:
        logger.warning(f"Literal join normalization disagrees with the blow-up on {literal_bad}/{len(rows)} graphs")
    return rows


class PsiKind(Enum):
    BIPARTITE = "bipartite"
    BLOWUP = "blowup"


@dataclass(frozen=True)
class PsiSpec:
    """Triangle-free limit placed on the last part of the join."""
    kind: PsiKind = PsiKind.BIPARTITE
    graph: Optional[Graph] = None


def required_psi_density(a: float) -> float:
    """Edge density the last join part needs: 2c(1-tc)/(1-(t-1)c)^2."""
    t, c = t_of(a), c_of(a)
    return 2 * c * (1 - t * c) / (1 - (t - 1) * c) ** 2


def psi_evaluator(spec: PsiSpec, density: float) -> Evaluator:
    """Evaluator of a triangle-free limit with edge density ``density``.

    Raises:
        DomainError: if the density is out of reach for the requested shape
    """
    if density > 0.5 + NUMERIC_TOLERANCE:
        raise DomainError(f"A triangle-free limit cannot have edge density {density} > 1/2")
    if spec.kind is PsiKind.BIPARTITE:
        beta = (1 - math.sqrt(max(0.0, 1 - 2 * density))) / 2
        h, weights = complete_graph(2), [beta, 1 - beta]
    else:
        if spec.graph is None or not is_triangle_free(spec.graph) or spec.graph.edge_count == 0:
            raise DomainError("Blow-up limits need a triangle-free graph with at least one edge")
        order = spec.graph.order
        scale = order * math.sqrt(density / (2 * spec.graph.edge_count))
        if scale > 1 + NUMERIC_TOLERANCE:
            raise DomainError(f"Blow-up of a graph with {spec.graph.edge_count} edges cannot reach density {density}")
        scale = min(scale, 1.0)
        # isolated slack class absorbs the remaining weight
        rows = tuple(spec.graph.rows) + (0,)
        h = Graph(order + 1, rows)
        weights = [scale / order] * order + [1 - scale]

    @lru_cache(maxsize=None)
    def evaluate_canonical(f: Graph) -> float:
        return blowup_limit(h, weights, f)

    return lambda f: evaluate_canonical(canonical(f))


def phi_member(a: float, psi_spec: Optional[PsiSpec] = None, level: int = 5) -> DensityVector:
    """Density vector of the extremal limit at ``a``: t-1 edgeless parts of weight c joined to psi."""
    if not 1 <= level <= MAX_JOIN_ORDER:
        raise OrderLimitError(f"Level must lie in 1..{MAX_JOIN_ORDER}, got {level}")
    t, c = t_of(a), c_of(a)
    psi = psi_evaluator(psi_spec or PsiSpec(), required_psi_density(a))
    phis = [zero_hom] * (t - 1) + [psi]
    alphas = [c] * (t - 1) + [1 - (t - 1) * c]
    values = {g: join_eval(phis, alphas, g) for g in enumerate_graphs(level)}
    logger.debug(
        f"Extremal limit at a={a} on level {level}",
        extra={'context': json.dumps({'t': t, 'c': c, 'graphs': len(values)})}
    )
    return DensityVector(level, values, exact=False)


def construction_gap(a: float, n: int, level: int = 4) -> float:
    """Largest |phi_member(F) - p(F, H_{a,n})| over graphs F on ``level`` vertices."""
    vector = phi_member(a, level=level)
    sizes = part_sizes(a, n)
    return max(abs(vector[g] - float(multipartite_density(g, sizes))) for g in enumerate_graphs(level))


@dataclass(frozen=True)
class ConvergenceReport:
    """Join-versus-construction gaps at n/4, n/2, n and their Richardson extrapolation."""
    a: float
    gaps: Dict[int, float]
    extrapolated: float
    constant: float

    @property
    def rate_ok(self) -> bool:
        return all(gap * n <= self.constant for n, gap in self.gaps.items())

    @property
    def extrapolation_ok(self) -> bool:
        return self.extrapolated <= self.constant / min(self.gaps)


def construction_convergence(a: float, n: int = 400, level: int = 4, constant: float = 10.0) -> ConvergenceReport:
    """Check that p(F, H_{a,m}) approaches phi_member(F) at rate constant/m for m in n/4, n/2, n.

    The extrapolated limit 2p(F, H_n) - p(F, H_{n/2}) cancels the 1/m term; its
    distance to the join value is bounded by the rate at the smallest order.
    """
    orders = [n // 4, n // 2, n]
    if orders[0] < 1:
        raise PreconditionError(f"Need n >= 4 for the extrapolation, got {n}")
    vector = phi_member(a, level=level)
    graphs = enumerate_graphs(level)
    finite = {m: {g: float(multipartite_density(g, part_sizes(a, m))) for g in graphs} for m in orders}
    gaps = {m: max(abs(vector[g] - finite[m][g]) for g in graphs) for m in orders}
    extrapolated = max(abs(2 * finite[n][g] - finite[n // 2][g] - vector[g]) for g in graphs)
    logger.info(
        f"Construction convergence at a={a}",
        extra={'context': json.dumps({'gaps': {str(m): gap for m, gap in gaps.items()},
                                      'extrapolated': extrapolated})}
    )
    return ConvergenceReport(a=a, gaps=gaps, extrapolated=extrapolated, constant=constant)


def vertex_linearity_gap(a: float, psi_spec: Optional[PsiSpec] = None) -> float:
    """phi(3[[e K3^1]] - 2h'[[e^2]]) - a(3b - 2a h'); zero on every extremal limit."""
    t, c = t_of(a), c_of(a)
    hprime = 3 * (t - 1) * c
    b = h3(a)
    vector = phi_member(a, psi_spec, level=4)
    e = lc(EDGE_ROOT)
    edge_triangle = evaluate(average(e * lc(K3_ROOT), TYPE_1, TYPE_0), vector)
    edge_square = evaluate(average(e * e, TYPE_1, TYPE_0), vector)
    return 3 * edge_triangle - 2 * hprime * edge_square - a * (3 * b - 2 * a * hprime)


def edge_weighted_gap(a: float, psi_spec: Optional[PsiSpec] = None) -> float:
    """phi([[anti-path^E K3^E]]_E) - (1/9)h' phi(anti-path); never positive on extremal limits."""
    t, c = t_of(a), c_of(a)
    hprime = 3 * (t - 1) * c
    vector = phi_member(a, psi_spec, level=4)
    lhs = evaluate(average(lc(ANTI_PATH_EDGE) * lc(K3_EDGE), TYPE_E, TYPE_0), vector)
    return lhs - hprime / 9 * evaluate(lc(ANTI_PATH), vector)


def clique_densities(vector: DensityVector, r_max: int) -> Dict[int, float]:
    """K_1..K_{r_max} densities read off a vector, with K_1 = 1."""
    if r_max > vector.level:
        raise PreconditionError(f"Vector of level {vector.level} has no K_{r_max} entry")
    out = {1: 1.0}
    for r in range(2, r_max + 1):
        out[r] = float(vector.clique(r))
    return out

