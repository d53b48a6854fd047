"""Grow a triangle-free graph to a prescribed edge count with few adjacency changes.

The loop stops as soon as the graph is bipartite, because a bipartite graph
can be rebalanced and filled with cross pairs up to floor(n^2/4) edges.
Before that it adds free pairs (no common neighbour) and clones a
maximum-degree vertex onto a lower-degree non-neighbour. On regular inputs,
where no vertex has lower degree, it replaces a few vertices by twins of both
ends of a high-degree edge. As a last resort it replaces the graph by the
complete bipartite graph between a maximum-degree vertex's neighbourhood and
the rest.
"""

import json
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, List, Set, Tuple

from core.errors import PreconditionError
from core.graph import Graph, bit_indices, is_triangle_free

logger = logging.getLogger(__name__)


@dataclass
class GrowthResult:
    graph: Graph
    edits: int
    added: int
    removed: int
    steps: Dict[str, int] = field(default_factory=dict)


class _Growth:
    def __init__(self, g: Graph):
        self.n = g.order
        self.rows = list(g.rows)
        self.original = g
        self.edges = g.edge_count
        self.steps: Counter = Counter()

    def add(self, u: int, v: int):
        self.rows[u] |= 1 << v
        self.rows[v] |= 1 << u
        self.edges += 1

    def remove(self, u: int, v: int):
        self.rows[u] &= ~(1 << v)
        self.rows[v] &= ~(1 << u)
        self.edges -= 1

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def coloring(self):
        """Component sides as (mask, mask) pairs, or None if some component has an odd cycle."""
        seen = 0
        components = []
        for root in range(self.n):
            if seen >> root & 1:
                continue
            sides = [1 << root, 0]
            frontier, side = 1 << root, 0
            seen |= 1 << root
            while frontier:
                reach = 0
                for v in bit_indices(frontier):
                    reach |= self.rows[v]
                if reach & sides[side]:
                    return None
                side ^= 1
                frontier = reach & ~seen
                if (reach & seen) & ~sides[side]:
                    return None
                sides[side] |= frontier
                seen |= frontier
            components.append((sides[0], sides[1]))
        return components

    def balanced_sides(self, components) -> Tuple[int, int]:
        """Orient each component so the two global sides are as even as possible."""
        reach: List[Set[int]] = [{0}]
        for a, b in components:
            sa, sb = a.bit_count(), b.bit_count()
            reach.append({r + sa for r in reach[-1]} | {r + sb for r in reach[-1]})
        goal = min(reach[-1], key=lambda r: (abs(2 * r - self.n), r))
        left = 0
        for i in range(len(components) - 1, -1, -1):
            a, b = components[i]
            if goal - a.bit_count() in reach[i]:
                left |= a
                goal -= a.bit_count()
            else:
                left |= b
                goal -= b.bit_count()
        return left, ((1 << self.n) - 1) & ~left

    def finish_bipartite(self, target: int, components):
        left, right = self.balanced_sides(components)
        while left.bit_count() * right.bit_count() < target:
            big, small = (left, right) if left.bit_count() > right.bit_count() else (right, left)
            v = min(bit_indices(big), key=lambda x: (self.degree(x), x))
            for u in bit_indices(self.rows[v]):
                self.remove(v, u)
            big &= ~(1 << v)
            small |= 1 << v
            left, right = big, small
            self.steps["rebalance"] += 1
        pairs = [(u, v) for u in bit_indices(left) for v in bit_indices(right) if not self.rows[u] >> v & 1]
        pairs.sort(key=lambda p: (not self.original.has_edge(*p), min(p), max(p)))
        for u, v in pairs:
            if self.edges >= target:
                break
            self.add(u, v)
            self.steps["cross"] += 1

    def add_free_pairs(self, target: int) -> bool:
        progress = False
        for u in range(self.n):
            for v in range(u + 1, self.n):
                if self.edges >= target:
                    return progress
                if not self.rows[u] >> v & 1 and not self.rows[u] & self.rows[v]:
                    self.add(u, v)
                    self.steps["free"] += 1
                    progress = True
        return progress

    def clone(self) -> bool:
        """Rewire a non-neighbour w of a maximum-degree x to N(x); N(x) is independent."""
        x = max(range(self.n), key=lambda v: (self.degree(v), -v))
        candidates = [
            w for w in range(self.n)
            if w != x and not self.rows[x] >> w & 1 and self.degree(w) < self.degree(x)
        ]
        if not candidates:
            return False
        w = min(candidates, key=lambda v: ((self.rows[v] ^ self.rows[x]).bit_count(), v))
        for u in bit_indices(self.rows[w] & ~self.rows[x]):
            self.remove(w, u)
        for u in bit_indices(self.rows[x] & ~self.rows[w]):
            self.add(w, u)
        self.steps["clone"] += 1
        return True

    def _blown_up(self, x: int, y: int, xs: int, ys: int) -> List[int]:
        """Rows after turning the vertices of ``xs`` into twins of x and those of ``ys`` into twins of y.

        The result is a blow-up of the graph induced on the kept vertices, so it stays triangle-free.
        """
        kept = ((1 << self.n) - 1) & ~(xs | ys)
        rows = [0] * self.n
        for v in bit_indices(kept):
            row = self.rows[v] & kept
            if self.rows[x] >> v & 1:
                row |= xs
            if self.rows[y] >> v & 1:
                row |= ys
            rows[v] = row
        for w in bit_indices(xs):
            rows[w] = (self.rows[x] & kept) | ys
        for w in bit_indices(ys):
            rows[w] = (self.rows[y] & kept) | xs
        return rows

    def clone_pair(self, target: int) -> bool:
        """Replace a few vertices by twins of both ends of a high-degree edge xy.

        Twins of x are joined to twins of y, so j pairs of twins add about j^2
        edges. Vertices outside N(x) and N(y) with small degree are replaced first.
        """
        edges = [(u, v) for u in range(self.n) for v in bit_indices(self.rows[u] >> (u + 1) << (u + 1))]
        if not edges:
            return False
        x, y = max(edges, key=lambda p: (self.degree(p[0]) + self.degree(p[1]), -p[0], -p[1]))
        near = self.rows[x] | self.rows[y]
        candidates = sorted(
            (v for v in range(self.n) if v not in (x, y)),
            key=lambda v: (near >> v & 1, self.degree(v), v),
        )
        best_rows, best_edges = None, self.edges
        xs = ys = 0
        for i in range(0, len(candidates) - 1, 2):
            u, w = candidates[i], candidates[i + 1]
            # give each twin the role closer to its current neighbourhood
            keep = (self.rows[u] ^ self.rows[x]).bit_count() + (self.rows[w] ^ self.rows[y]).bit_count()
            swap = (self.rows[w] ^ self.rows[x]).bit_count() + (self.rows[u] ^ self.rows[y]).bit_count()
            if swap < keep:
                u, w = w, u
            xs |= 1 << u
            ys |= 1 << w
            rows = self._blown_up(x, y, xs, ys)
            count = sum(row.bit_count() for row in rows) // 2
            if count > best_edges:
                best_rows, best_edges = rows, count
                if count >= target:
                    break
        if best_rows is None:
            return False
        self.rows = best_rows
        self.edges = best_edges
        self.steps["clone_pair"] += 1
        return True

    def symmetrize(self):
        x = max(range(self.n), key=lambda v: (self.degree(v), -v))
        inner = self.rows[x]
        outer = ((1 << self.n) - 1) & ~inner
        for v in range(self.n):
            side = outer if inner >> v & 1 else inner
            for u in bit_indices(self.rows[v] & ~side):
                self.remove(v, u)
            for u in bit_indices(side & ~self.rows[v]):
                self.add(v, u)
        self.steps["symmetrize"] += 1

    def trim(self, target: int):
        surplus = self.edges - target
        if surplus <= 0:
            return
        edges = [(u, v) for u in range(self.n) for v in bit_indices(self.rows[u] >> (u + 1) << (u + 1))]
        edges.sort(key=lambda p: (self.original.has_edge(*p), p))
        for u, v in edges[:surplus]:
            self.remove(u, v)
        self.steps["trim"] += surplus

    def result(self) -> GrowthResult:
        graph = Graph(self.n, tuple(self.rows))
        added = removed = 0
        for u in range(self.n):
            diff = (self.rows[u] ^ self.original.rows[u]) >> (u + 1) << (u + 1)
            added += (diff & self.rows[u]).bit_count()
            removed += (diff & self.original.rows[u]).bit_count()
        return GrowthResult(graph, added + removed, added, removed, dict(self.steps))


def grow_trianglefree(g: Graph, s: int) -> GrowthResult:
    """Triangle-free graph on the vertices of ``g`` with exactly ``s`` edges.

    Raises:
        PreconditionError: if g has a triangle or s is outside [e(g), floor(n^2/4)]
    """
    n = g.order
    if not is_triangle_free(g):
        raise PreconditionError("Input graph must be triangle-free")
    if not g.edge_count <= s <= n * n // 4:
        raise PreconditionError(f"Target {s} outside [{g.edge_count}, {n * n // 4}]")
    state = _Growth(g)
    while state.edges < s:
        components = state.coloring()
        if components is not None:
            state.finish_bipartite(s, components)
            break
        if state.add_free_pairs(s):
            continue
        if not state.clone() and not state.clone_pair(s):
            state.symmetrize()
    state.trim(s)
    result = state.result()
    logger.info(
        f"Grew {g.edge_count} -> {s} edges on {n} vertices with {result.edits} edits",
        extra={'context': json.dumps(result.steps)}
    )
    return result


def random_trianglefree(n: int, edges: int, rng) -> Graph:
    """Random greedy triangle-free graph: pairs in random order, kept while no triangle forms, up to ``edges``."""
    rows = [0] * n
    count = 0
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for index in rng.permutation(len(pairs)):
        if count >= edges:
            break
        u, v = pairs[int(index)]
        if rows[u] & rows[v]:
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        count += 1
    return Graph(n, tuple(rows))
