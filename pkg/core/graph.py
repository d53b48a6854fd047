"""Bit-adjacency simple graphs.

A Graph stores one integer per vertex whose bit ``j`` is set when the vertex is
adjacent to ``j``. Graphs are immutable and hashable, so they can key density
tables and caches directly. Canonical forms live in :mod:`core.canonical`;
everything here is labeling-dependent.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Sequence, Tuple

import networkx as nx

from core.config import MAX_ORDER
from core.errors import OrderLimitError, PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices ``0..order-1``."""
    order: int
    rows: Tuple[int, ...]

    def __post_init__(self):
        if self.order < 0:
            raise PreconditionError(f"Graph order must be non-negative, got {self.order}")
        if len(self.rows) != self.order:
            raise PreconditionError(
                f"Expected {self.order} adjacency rows, got {len(self.rows)}"
            )
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row < 0:
                raise PreconditionError(f"Row {v} references vertices outside the graph")
            if row >> v & 1:
                raise PreconditionError(f"Vertex {v} has a loop")
            rest = row
            while rest:
                low = rest & -rest
                u = low.bit_length() - 1
                if not self.rows[u] >> v & 1:
                    raise PreconditionError(f"Adjacency {v}-{u} is not symmetric")
                rest ^= low

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> List[int]:
        return [row.bit_count() for row in self.rows]

    def neighbors(self, v: int) -> List[int]:
        return bit_indices(self.rows[v])

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for u in range(self.order) for v in bit_indices(self.rows[u] >> (u + 1) << (u + 1))]

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Subgraph induced on ``vertices``, relabeled in the given order."""
        new_rows = []
        for v in vertices:
            row = self.rows[v]
            new_row = 0
            for j, u in enumerate(vertices):
                if row >> u & 1:
                    new_row |= 1 << j
            new_rows.append(new_row)
        return Graph(len(vertices), tuple(new_rows))

    def permuted(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``p`` is the old vertex ``order[p]``."""
        return self.induced(order)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, edges={self.edges()})"


def bit_indices(mask: int) -> List[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def from_edges(order: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    rows = [0] * order
    for u, v in edges:
        if u == v:
            raise PreconditionError(f"Loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def empty_graph(order: int) -> Graph:
    return Graph(order, (0,) * order)


def complete_graph(order: int) -> Graph:
    full = (1 << order) - 1
    return Graph(order, tuple(full & ~(1 << v) for v in range(order)))


def cycle_graph(order: int) -> Graph:
    return from_edges(order, [(v, (v + 1) % order) for v in range(order)])


def path_graph(order: int) -> Graph:
    return from_edges(order, [(v, v + 1) for v in range(order - 1)])


def star_graph(leaves: int) -> Graph:
    return from_edges(leaves + 1, [(0, v) for v in range(1, leaves + 1)])


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    rows: List[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.rows)
        offset += g.order
    return Graph(offset, tuple(rows))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with the given part sizes (zero sizes allowed)."""
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in sizes:
        part = ((1 << size) - 1) << start
        rows.extend([full & ~part] * size)
        start += size
    return Graph(n, tuple(rows))


def turan_sizes(t: int, n: int) -> List[int]:
    if t < 1 or n < 0:
        raise PreconditionError(f"Turán graph needs t >= 1 and n >= 0, got t={t}, n={n}")
    base, extra = divmod(n, t)
    return [base + 1 if i < extra else base for i in range(t)]


def turan_graph(t: int, n: int) -> Graph:
    """Balanced complete t-partite graph on n vertices."""
    return complete_multipartite(turan_sizes(t, n))


def graph_join(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union of ``graphs`` plus every edge between different members."""
    n = sum(g.order for g in graphs)
    if n > MAX_ORDER:
        raise OrderLimitError(f"Join would have {n} vertices, limit is {MAX_ORDER}")
    full = (1 << n) - 1
    rows: List[int] = []
    offset = 0
    for g in graphs:
        block = ((1 << g.order) - 1) << offset
        rows.extend((row << offset) | (full & ~block) for row in g.rows)
        offset += g.order
    return Graph(n, tuple(rows))


def clique_count(g: Graph, r: int) -> int:
    """Number of r-subsets of V(g) inducing a complete graph."""
    if r < 0:
        raise PreconditionError(f"Clique size must be non-negative, got {r}")
    return count_cliques(g.rows, r)


def count_cliques(rows: Sequence[int], r: int, candidates: int = -1) -> int:
    if candidates < 0:
        candidates = (1 << len(rows)) - 1
    if r == 0:
        return 1
    if r == 1:
        return candidates.bit_count()
    if r == 2:
        total = 0
        rest = candidates
        while rest:
            low = rest & -rest
            rest ^= low
            total += (rest & rows[low.bit_length() - 1]).bit_count()
        return total
    total = 0
    rest = candidates
    while rest:
        low = rest & -rest
        rest ^= low
        total += count_cliques(rows, r - 1, rest & rows[low.bit_length() - 1])
    return total


def triangle_count(g: Graph) -> int:
    return count_cliques(g.rows, 3)


def is_triangle_free(g: Graph) -> bool:
    for u, v in g.edges():
        if g.rows[u] & g.rows[v]:
            return False
    return True


def vertex_subsets(order: int, size: int) -> Iterable[Tuple[int, ...]]:
    return combinations(range(order), size)


def to_networkx(g: Graph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(range(g.order))
    graph.add_edges_from(g.edges())
    return graph


def from_networkx(graph: nx.Graph) -> Graph:
    nodes = list(graph.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return from_edges(len(nodes), [(index[u], index[v]) for u, v in graph.edges()])
