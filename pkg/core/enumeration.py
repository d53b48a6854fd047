"""Isomorphism-free generation of small graphs by canonical augmentation.

Each graph on ``k+1`` vertices is produced from exactly one parent: the graph
left after deleting its canonical vertex. A child built by attaching a new
vertex ``v`` to a parent is kept only when ``v`` lies in the automorphism orbit
of the child's canonical vertex, so children of different parents never
collide and each parent can be expanded independently.
"""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from core.canonical import canonical, canonical_labeled, canonical_order
from core.config import DEFAULT_THREADS, MAX_ENUM_ORDER
from core.errors import OrderLimitError
from core.graph import Graph

logger = logging.getLogger(__name__)


def _vertex_invariant(rows: Sequence[int], v: int) -> Tuple[int, Tuple[int, ...]]:
    row = rows[v]
    neighbour_degrees = []
    while row:
        low = row & -row
        neighbour_degrees.append(rows[low.bit_length() - 1].bit_count())
        row ^= low
    return rows[v].bit_count(), tuple(sorted(neighbour_degrees))


def _accepts(child: Graph, v: int) -> bool:
    """Canonical-deletion test: is ``v`` in the orbit of the child's canonical vertex?"""
    degrees = [row.bit_count() for row in child.rows]
    if degrees[v] < max(degrees):
        return False
    invariants = [_vertex_invariant(child.rows, u) for u in range(child.order)]
    best = max(invariants)
    if invariants[v] != best:
        return False
    tied = [u for u in range(child.order) if invariants[u] == best]
    if len(tied) == 1:
        return True
    position = {vertex: p for p, vertex in enumerate(canonical_order(child))}
    chosen = min(tied, key=position.__getitem__)
    if chosen == v:
        return True
    return canonical_labeled(child, (v,)) == canonical_labeled(child, (chosen,))


def _children(parent: Graph) -> List[Graph]:
    k = parent.order
    seen: Dict[Graph, None] = {}
    for subset in range(1 << k):
        rows = tuple(row | ((subset >> i & 1) << k) for i, row in enumerate(parent.rows)) + (subset,)
        child = Graph(k + 1, rows)
        if _accepts(child, k):
            seen.setdefault(canonical(child), None)
    return list(seen)


def _expand(parents: Sequence[Graph]) -> List[Graph]:
    out: List[Graph] = []
    for parent in parents:
        out.extend(_children(parent))
    return out


def _sort_key(g: Graph) -> Tuple[int, Tuple[int, ...]]:
    return g.edge_count, g.rows


@lru_cache(maxsize=None)
def _enumerate(order: int, threads: int) -> Tuple[Graph, ...]:
    if order == 1:
        return (Graph(1, (0,)),)
    parents = list(_enumerate(order - 1, threads))
    started = time.perf_counter()
    if threads > 1 and len(parents) >= 4 * threads:
        shards = [parents[i::threads] for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            graphs = [g for shard in pool.map(_expand, shards) for g in shard]
    else:
        graphs = _expand(parents)
    graphs.sort(key=_sort_key)
    logger.info(
        f"Enumerated {len(graphs)} graphs on {order} vertices "
        f"in {time.perf_counter() - started:.2f}s"
    )
    return tuple(graphs)


def enumerate_graphs(order: int, threads: int = DEFAULT_THREADS) -> List[Graph]:
    """One canonical representative per isomorphism class of graphs on ``order`` vertices.

    Args:
        order: number of vertices, 1..10
        threads: worker processes used to expand parents in parallel

    Returns:
        List of canonical graphs ordered by edge count, then adjacency rows

    Raises:
        OrderLimitError: if ``order`` is outside 1..10
    """
    if not 1 <= order <= MAX_ENUM_ORDER:
        raise OrderLimitError(f"Enumeration supports 1..{MAX_ENUM_ORDER} vertices, got {order}")
    return list(_enumerate(order, max(1, threads)))


def graphs_by_edges(order: int, edges: int) -> List[Graph]:
    return [g for g in enumerate_graphs(order) if g.edge_count == edges]
