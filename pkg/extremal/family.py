"""The extremal family: a complete (t-1)-partite shell joined to a part U that
carries a triangle-free graph with a prescribed number of edges.

Finite members are built as Graphs; for large n only part sizes are kept and
all counts come from them.
"""

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, factorial, floor
from typing import Dict, List, Optional, Sequence, Tuple

from core.config import MAX_LOCAL_ORDER
from core.errors import ConstructionError, OrderLimitError, PreconditionError
from core.graph import Graph, complement, complete_multipartite, is_triangle_free
from extremal.curves import c_of, link_edge_density, params, t_of

logger = logging.getLogger(__name__)

_SIZE_SLACK = 1e-9


@dataclass(frozen=True)
class HFamilySpec:
    """Family member request; ``u_graph`` replaces the default K(V_t, V_{t+1}) on U."""
    a: float
    n: int
    u_graph: Optional[Graph] = None


def part_sizes(a: float, n: int) -> List[int]:
    """Sizes |V_1| = ... = |V_t| = floor(cn) followed by the remainder |V_{t+1}|."""
    if n < 0:
        raise PreconditionError(f"Order must be non-negative, got {n}")
    t = t_of(a)
    # c = 1/t at a = 1 - 1/t must not round down
    size = min(floor(c_of(a) * n + _SIZE_SLACK), n // t)
    return [size] * t + [n - t * size]


def elementary_symmetric(values: Sequence, r: int):
    """r-th elementary symmetric polynomial of ``values``."""
    e = [1] + [0] * r
    for v in values:
        for k in range(r, 0, -1):
            e[k] = e[k] + e[k - 1] * v
    return e[r]


@dataclass
class HStatistics:
    n: int
    parts: List[int]
    edges: int
    triangles: int
    cliques: Dict[int, int] = field(default_factory=dict)

    @property
    def edge_density(self) -> Fraction:
        return Fraction(self.edges, comb(self.n, 2)) if self.n >= 2 else Fraction(0)

    @property
    def triangle_density(self) -> Fraction:
        return Fraction(self.triangles, comb(self.n, 3)) if self.n >= 3 else Fraction(0)


def h_statistics(spec: HFamilySpec, max_clique: int = 5) -> HStatistics:
    """Exact edge and clique counts of a family member from its part sizes.

    The counts do not depend on the choice of triangle-free graph on U: each
    clique meets U in at most an edge.
    """
    parts = part_sizes(spec.a, spec.n)
    cliques = {r: elementary_symmetric(parts, r) for r in range(1, max_clique + 1)}
    stats = HStatistics(
        n=spec.n, parts=parts, edges=elementary_symmetric(parts, 2), triangles=cliques.get(3, 0), cliques=cliques
    )
    logger.debug(
        f"Family statistics at a={spec.a}, n={spec.n}",
        extra={'context': json.dumps({'parts': parts, 'edges': stats.edges, 'triangles': stats.triangles})}
    )
    return stats


def _validate_u_graph(u_graph: Graph, u_order: int, u_edges: int):
    if u_graph.order != u_order:
        raise ConstructionError(f"U-graph has {u_graph.order} vertices, expected {u_order}")
    if u_graph.edge_count != u_edges:
        raise ConstructionError(f"U-graph has {u_graph.edge_count} edges, expected {u_edges}")
    if not is_triangle_free(u_graph):
        raise ConstructionError("U-graph contains a triangle")


def construct_H(spec: HFamilySpec) -> Graph:
    """Family member as a Graph: shell parts first, then U = V_t followed by V_{t+1}.

    Raises:
        OrderLimitError: beyond the in-memory order cap
        ConstructionError: if the U-graph is not triangle-free with |V_t||V_{t+1}| edges
    """
    if spec.n > MAX_LOCAL_ORDER:
        raise OrderLimitError(f"Cannot materialize a {spec.n}-vertex graph; use h_statistics")
    parts = part_sizes(spec.a, spec.n)
    if spec.u_graph is None:
        return complete_multipartite(parts)

    shell = parts[:-2]
    u_order = parts[-2] + parts[-1]
    _validate_u_graph(spec.u_graph, u_order, parts[-2] * parts[-1])
    base = complete_multipartite(shell + [u_order])
    offset = sum(shell)
    rows = list(base.rows)
    for i, row in enumerate(spec.u_graph.rows):
        rows[offset + i] |= row << offset
    return Graph(spec.n, tuple(rows))


def multipartite_parts(f: Graph) -> Optional[List[int]]:
    """Part sizes if ``f`` is complete multipartite, else None."""
    co = complement(f)
    seen = 0
    sizes = []
    for v in range(f.order):
        if seen >> v & 1:
            continue
        part = co.rows[v] | (1 << v)
        for u in range(f.order):
            if part >> u & 1 and (co.rows[u] | (1 << u)) != part:
                return None
        seen |= part
        sizes.append(part.bit_count())
    return sizes


def multipartite_count(f: Graph, sizes: Sequence[int]) -> int:
    """Number of vertex subsets of the complete multipartite graph K(sizes) inducing ``f``."""
    f_parts = multipartite_parts(f)
    if f_parts is None:
        return 0
    needed = Counter(f_parts)
    keys = sorted(needed)
    # state: remaining multiplicity of each F-part size
    ways: Dict[Tuple[int, ...], int] = {tuple(needed[k] for k in keys): 1}
    for size in sizes:
        nxt: Dict[Tuple[int, ...], int] = Counter()
        for state, count in ways.items():
            nxt[state] += count
            for idx, k in enumerate(keys):
                if state[idx] and k <= size:
                    reduced = state[:idx] + (state[idx] - 1,) + state[idx + 1:]
                    nxt[reduced] += count * comb(size, k)
        ways = nxt
    return ways.get(tuple(0 for _ in keys), 0)


def multipartite_density(f: Graph, sizes: Sequence[int]) -> Fraction:
    """Exact induced density of ``f`` in K(sizes)."""
    n = sum(sizes)
    if f.order > n:
        raise PreconditionError(f"Pattern has {f.order} vertices but the host only {n}")
    return Fraction(multipartite_count(f, sizes), comb(n, f.order))


def vertex_clique_density(sizes: Sequence[int], index: int, r: int) -> Fraction:
    """Density of K_r rooted at a vertex of part ``index`` in K(sizes)."""
    n = sum(sizes)
    others = [s for i, s in enumerate(sizes) if i != index]
    if r < 1 or n - 1 < r - 1:
        raise PreconditionError(f"No rooted K_{r} in a {n}-vertex graph")
    return Fraction(elementary_symmetric(others, r - 1), comb(n - 1, r - 1))


@dataclass(frozen=True)
class VertexProfile:
    part: int
    weight: float
    x: float
    k3: float
    k4: float
    link_density: float
    z: float


def vertex_profiles(a: float) -> List[VertexProfile]:
    """Rooted densities at a vertex of each part of the extremal limit with bipartite U.

    The limit has t parts of weight c and one of weight 1 - tc.
    """
    p = params(a)
    weights = [p.c] * p.t + [1 - p.t * p.c]
    profiles = []
    for i, w in enumerate(weights):
        if w <= 0:
            continue
        others = weights[:i] + weights[i + 1:]
        x = 1 - w
        k3 = 2 * elementary_symmetric(others, 2)
        k4 = factorial(3) * elementary_symmetric(others, 3)
        z = x / p.A
        profiles.append(VertexProfile(i, w, x, k3, k4, k3 / (x * x), z))
        logger.debug(f"Part {i}: x={x:.6f} link={k3 / (x * x):.6f} expected={link_edge_density(z, p.mu):.6f}")
    return profiles
