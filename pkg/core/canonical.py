"""Canonical labeling by individualization and refinement.

The canonical form of a graph is the relabeling whose upper-triangle bit string
(graph6 column order) is lexicographically smallest among the labelings that
respect the degree-refined vertex partition. Labeled vertices of a flag are
forced into the first positions, so label-preserving isomorphism reduces to
equality of canonical forms.
"""

import logging
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

from core.config import MAX_ORDER
from core.errors import OrderLimitError
from core.graph import Graph

logger = logging.getLogger(__name__)

Cells = List[Tuple[int, ...]]


def _mask(cell: Sequence[int]) -> int:
    out = 0
    for v in cell:
        out |= 1 << v
    return out


def _refine(rows: Sequence[int], cells: Cells) -> Cells:
    """Coarsest equitable refinement of an ordered partition."""
    while True:
        masks = [_mask(cell) for cell in cells]
        refined: Cells = []
        split = False
        for cell in cells:
            if len(cell) == 1:
                refined.append(cell)
                continue
            signature = {v: tuple((rows[v] & m).bit_count() for m in masks) for v in cell}
            ordered = sorted(cell, key=lambda v: (signature[v], v))
            group = [ordered[0]]
            for v in ordered[1:]:
                if signature[v] == signature[group[0]]:
                    group.append(v)
                else:
                    refined.append(tuple(group))
                    group = [v]
                    split = True
            refined.append(tuple(group))
        cells = refined
        if not split:
            return cells


def _code(rows: Sequence[int], order: Sequence[int]) -> int:
    code = 0
    for j in range(1, len(order)):
        row = rows[order[j]]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


class _Search:
    """Depth-first search over the refinement tree with automorphism pruning."""

    def __init__(self, rows: Sequence[int]):
        self.rows = rows
        self.best_code: Optional[int] = None
        self.best_order: Optional[Tuple[int, ...]] = None
        self.generators: List[Tuple[int, ...]] = []

    def run(self, cells: Cells) -> Tuple[int, ...]:
        self._visit(cells, ())
        return self.best_order

    def _visit(self, cells: Cells, prefix: Tuple[int, ...]):
        cells = _refine(self.rows, cells)
        target_index = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
        if target_index is None:
            self._leaf(tuple(cell[0] for cell in cells))
            return
        target = cells[target_index]
        tried: List[int] = []
        for v in target:
            if tried and self._covered(v, tried, prefix):
                continue
            rest = tuple(u for u in target if u != v)
            child = cells[:target_index] + [(v,), rest] + cells[target_index + 1:]
            self._visit(child, prefix + (v,))
            tried.append(v)

    def _leaf(self, order: Tuple[int, ...]):
        code = _code(self.rows, order)
        if self.best_code is None or code < self.best_code:
            self.best_code = code
            self.best_order = order
        elif code == self.best_code:
            image = [0] * len(order)
            for p, v in enumerate(self.best_order):
                image[v] = order[p]
            self.generators.append(tuple(image))

    def _covered(self, v: int, tried: List[int], prefix: Tuple[int, ...]) -> bool:
        """Whether a known automorphism fixing ``prefix`` maps a tried vertex to v."""
        gens = [g for g in self.generators if all(g[p] == p for p in prefix)]
        if not gens:
            return False
        parent = list(range(len(self.rows)))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in gens:
            for x, y in enumerate(g):
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[rx] = ry
        root = find(v)
        return any(find(w) == root for w in tried)


@lru_cache(maxsize=250_000)
def _canonical_order(order: int, rows: Tuple[int, ...], labels: Tuple[int, ...]) -> Tuple[int, ...]:
    labelled = set(labels)
    cells: Cells = [(v,) for v in labels]
    rest = tuple(v for v in range(order) if v not in labelled)
    if rest:
        cells.append(rest)
    if not cells:
        return ()
    return _Search(rows).run(cells)


def canonical_order(g: Graph, labels: Sequence[int] = ()) -> Tuple[int, ...]:
    """Vertex sequence realizing the canonical form; position p holds old vertex order[p]."""
    if g.order > MAX_ORDER:
        raise OrderLimitError(f"Canonical form supports at most {MAX_ORDER} vertices, got {g.order}")
    return _canonical_order(g.order, g.rows, tuple(labels))


def canonical(g: Graph) -> Graph:
    """Canonical representative of the isomorphism class of ``g``."""
    return g.permuted(canonical_order(g))


def canonical_labeled(g: Graph, labels: Sequence[int]) -> Graph:
    """Canonical form with ``labels`` forced to positions 0..len(labels)-1 in order."""
    return g.permuted(canonical_order(g, labels))


def is_canonical(g: Graph) -> bool:
    return canonical(g) == g


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.order == h.order and g.edge_count == h.edge_count and canonical(g) == canonical(h)


@lru_cache(maxsize=50_000)
def _automorphisms(order: int, rows: Tuple[int, ...]) -> int:
    degrees = [row.bit_count() for row in rows]
    image = [-1] * order
    used = [False] * order

    def extend(v: int) -> int:
        if v == order:
            return 1
        total = 0
        for w in range(order):
            if used[w] or degrees[w] != degrees[v]:
                continue
            if any((rows[v] >> u & 1) != (rows[w] >> image[u] & 1) for u in range(v)):
                continue
            image[v] = w
            used[w] = True
            total += extend(v + 1)
            used[w] = False
        return total

    return extend(0)


def automorphism_count(g: Graph) -> int:
    """Size of the automorphism group of ``g`` (backtracking, small graphs only)."""
    if g.order > MAX_ORDER:
        raise OrderLimitError(f"Automorphism count supports at most {MAX_ORDER} vertices")
    return _automorphisms(g.order, g.rows)


def orbit_partition(g: Graph) -> Dict[int, int]:
    """Map each vertex to the smallest vertex of its automorphism orbit."""
    rooted = {v: canonical_labeled(g, (v,)) for v in range(g.order)}
    reps: Dict[Graph, int] = {}
    out = {}
    for v in range(g.order):
        out[v] = reps.setdefault(rooted[v], v)
    return out
