"""Exact minimum clique counts over all graphs with n vertices and m edges."""

import logging
import time
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Dict, List, Sequence, Tuple

from core.config import BRUTE_MAX_N, DEFAULT_THREADS
from core.enumeration import enumerate_graphs
from core.errors import DomainError, OrderLimitError
from core.graph import Graph, clique_count

logger = logging.getLogger(__name__)

SUPPORTED_CLIQUES = (3, 4)


@dataclass
class CurvePoint:
    n: int
    m: int
    min_count: int
    witnesses: List[Graph] = field(default_factory=list)
    r: int = 3

    @property
    def density(self) -> Fraction:
        return Fraction(self.min_count, comb(self.n, self.r)) if self.n >= self.r else Fraction(0)


def _check(n: int, r: int, max_n: int):
    if not 1 <= n <= max_n:
        raise OrderLimitError(f"Brute force supports 1..{max_n} vertices, got {n}")
    if r not in SUPPORTED_CLIQUES:
        raise DomainError(f"Clique order must be one of {SUPPORTED_CLIQUES}, got {r}")


def _minimum(graphs: Sequence[Graph], r: int) -> Tuple[int, List[Graph]]:
    best = None
    witnesses: List[Graph] = []
    for g in graphs:
        count = clique_count(g, r)
        if best is None or count < best:
            best, witnesses = count, [g]
        elif count == best:
            witnesses.append(g)
    return best, witnesses


def brute_min(n: int, m: int, r: int = 3, max_n: int = BRUTE_MAX_N) -> CurvePoint:
    """Smallest K_r count over graphs on n vertices with m edges, with every witness.

    Raises:
        OrderLimitError: if n exceeds the brute-force cap
        DomainError: if m is outside [0, C(n,2)] or r is unsupported
    """
    _check(n, r, max_n)
    if not 0 <= m <= comb(n, 2):
        raise DomainError(f"Edge count {m} outside [0, {comb(n, 2)}]")
    graphs = [g for g in enumerate_graphs(n) if g.edge_count == m]
    best, witnesses = _minimum(graphs, r)
    return CurvePoint(n, m, best, witnesses, r)


def _shard(args) -> Dict[int, Tuple[int, List[Graph]]]:
    groups, r = args
    return {m: _minimum(graphs, r) for m, graphs in groups.items()}


def brute_curve(n: int, r: int = 3, threads: int = DEFAULT_THREADS, max_n: int = BRUTE_MAX_N) -> List[CurvePoint]:
    """One CurvePoint per edge count 0..C(n,2), sharded by edge count across workers."""
    _check(n, r, max_n)
    started = time.perf_counter()
    by_edges: Dict[int, List[Graph]] = defaultdict(list)
    for g in enumerate_graphs(n):
        by_edges[g.edge_count].append(g)

    results: Dict[int, Tuple[int, List[Graph]]] = {}
    if threads > 1:
        shards = [dict(list(by_edges.items())[i::threads]) for i in range(threads)]
        with ProcessPoolExecutor(max_workers=threads) as pool:
            for part in pool.map(_shard, [(shard, r) for shard in shards]):
                results.update(part)
    else:
        results = _shard((by_edges, r))

    points = [CurvePoint(n, m, *results[m], r) for m in sorted(results)]
    logger.info(f"Brute curve for n={n}, r={r}: {len(points)} points in {time.perf_counter() - started:.2f}s")
    return points
