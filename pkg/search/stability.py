"""Desk-scale probe: graphs with near-minimal triangle counts are close to Turán graphs."""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import List, Optional

from core.config import BRUTE_MAX_N, NUMERIC_TOLERANCE
from core.enumeration import enumerate_graphs
from core.errors import DomainError, OrderLimitError
from core.graph import Graph, triangle_count, turan_graph
from extremal.curves import goodman_bound
from search.edit_distance import turan_distance

logger = logging.getLogger(__name__)


@dataclass
class StabilityEntry:
    graph: Graph
    triangles: int
    distance: int

    def normalized(self) -> Fraction:
        pairs = comb(self.graph.order, 2)
        return Fraction(self.distance, pairs) if pairs else Fraction(0)


@dataclass
class StabilityReport:
    n: int
    t: int
    m: int
    delta: float
    threshold: float
    entries: List[StabilityEntry] = field(default_factory=list)

    @property
    def max_distance(self) -> Fraction:
        return max((e.normalized() for e in self.entries), default=Fraction(0))


def stability_probe(n: int, t: int, delta: float, m: Optional[int] = None) -> StabilityReport:
    """Every (n, m)-graph within ``delta * C(n,3)`` triangles of the Goodman bound, with its distance to T_t(n).

    ``m`` defaults to the edge count of T_t(n).

    Raises:
        OrderLimitError: if n exceeds the brute-force cap
        DomainError: if t < 1, delta < 0 or m is out of range
    """
    if not 1 <= n <= BRUTE_MAX_N:
        raise OrderLimitError(f"Stability probe supports 1..{BRUTE_MAX_N} vertices, got {n}")
    if t < 1 or delta < 0:
        raise DomainError(f"Need t >= 1 and delta >= 0, got t={t}, delta={delta}")
    if m is None:
        m = turan_graph(t, n).edge_count
    if not 0 <= m <= comb(n, 2):
        raise DomainError(f"Edge count {m} outside [0, {comb(n, 2)}]")

    threshold = goodman_bound(3, m, n) + delta * comb(n, 3)
    report = StabilityReport(n, t, m, delta, threshold)
    for g in enumerate_graphs(n):
        if g.edge_count != m:
            continue
        count = triangle_count(g)
        if count <= threshold + NUMERIC_TOLERANCE:
            report.entries.append(StabilityEntry(g, count, turan_distance(g, t)))
    logger.info(f"Stability probe n={n}, t={t}, m={m}: {len(report.entries)} graphs, "
                f"max distance {report.max_distance}")
    return report
