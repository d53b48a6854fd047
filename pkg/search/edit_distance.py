"""Edit distance from a graph to the extremal family and to Turán graphs.

A family member at (a, n) is a complete multipartite shell of t - 1 parts of
size s = floor(cn) joined to a set U of the remaining vertices, where U carries
any triangle-free graph with s * (|U| - s) edges. Distances are counts of
changed adjacencies, reported normalized by C(n, 2).
"""

import json
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterator, List, Optional, Sequence

import numpy as np

from core.canonical import canonical
from core.config import DEFAULT_SEED, MAX_EXACT_EDIT_ORDER, MAX_EXACT_U_ORDER, MAX_LOCAL_ORDER
from core.errors import ConstructionError, DomainError, OrderLimitError
from core.graph import Graph, bit_indices, turan_sizes
from extremal.family import elementary_symmetric, part_sizes

logger = logging.getLogger(__name__)

MODES = ("auto", "exact", "heuristic")


@dataclass
class EditBracket:
    """Normalized distance bracket; ``exact`` when both ends agree by construction."""
    lower: Fraction
    upper: Fraction
    exact: bool
    edits_lower: int = 0
    edits_upper: int = 0
    parts: List[int] = field(default_factory=list)


def edges_inside(rows: Sequence[int], mask: int) -> int:
    return sum((rows[v] & mask).bit_count() for v in bit_indices(mask)) // 2


def multipartite_edits(rows: Sequence[int], blocks: Sequence[int], total_edges: int) -> int:
    """Adjacency changes turning the graph into the complete multipartite graph on ``blocks``."""
    n = len(rows)
    inside = sum(edges_inside(rows, b) for b in blocks)
    cross_pairs = comb(n, 2) - sum(comb(b.bit_count(), 2) for b in blocks)
    return 2 * inside + cross_pairs - total_edges


def partitions(n: int, sizes: Sequence[int], distinct_first: bool = False) -> Iterator[List[int]]:
    """Block masks covering range(n) with the given sizes.

    Consecutive blocks of equal size are unordered: only the arrangement with
    increasing block minima is produced. With ``distinct_first`` block 0 is
    never interchangeable with block 1.
    """
    if sum(sizes) != n:
        raise DomainError(f"Block sizes {list(sizes)} do not add up to {n}")
    blocks: List[int] = []

    def place(i: int, remaining: int, prev_min: int) -> Iterator[List[int]]:
        if i == len(sizes):
            yield list(blocks)
            return
        size = sizes[i]
        unordered = i > 0 and sizes[i - 1] == size and not (distinct_first and i == 1)
        for combo in combinations(bit_indices(remaining), size):
            if unordered and combo and combo[0] < prev_min:
                continue
            mask = sum(1 << v for v in combo)
            blocks.append(mask)
            yield from place(i + 1, remaining & ~mask, combo[0] if combo else -1)
            blocks.pop()

    yield from place(0, (1 << n) - 1, -1)


@lru_cache(maxsize=None)
def _trianglefree_edits(u_graph: Graph, target: int) -> Optional[int]:
    """Fewest changes making ``u_graph`` triangle-free with exactly ``target`` edges."""
    k = u_graph.order
    pairs = [(i, j) for i in range(k) for j in range(i + 1, k)]
    present = [u_graph.has_edge(i, j) for i, j in pairs]
    suffix = [0] * (len(pairs) + 1)
    for idx in range(len(pairs) - 1, -1, -1):
        suffix[idx] = suffix[idx + 1] + present[idx]
    chosen_rows = [0] * k
    best = [math.inf]

    def search(idx: int, chosen: int, cost: int):
        need = target - chosen
        if need < 0 or need > len(pairs) - idx:
            return
        if cost + abs(need - suffix[idx]) >= best[0]:
            return
        if idx == len(pairs):
            best[0] = cost
            return
        i, j = pairs[idx]
        has = present[idx]
        for take in ((True, False) if has else (False, True)):
            if take:
                if chosen_rows[i] & chosen_rows[j]:
                    continue
                chosen_rows[i] |= 1 << j
                chosen_rows[j] |= 1 << i
                search(idx + 1, chosen + 1, cost + (not has))
                chosen_rows[i] &= ~(1 << j)
                chosen_rows[j] &= ~(1 << i)
            else:
                search(idx + 1, chosen, cost + has)

    search(0, 0, 0)
    return None if best[0] == math.inf else int(best[0])


@lru_cache(maxsize=None)
def _bipartite_edits(u_graph: Graph, side: int) -> int:
    """Fewest changes turning ``u_graph`` into a complete bipartite graph with one side of size ``side``."""
    full = u_graph.full_mask
    return min(
        multipartite_edits(u_graph.rows, [mask, full & ~mask], u_graph.edge_count)
        for mask in (sum(1 << v for v in c) for c in combinations(range(u_graph.order), side))
    )


def _u_bracket(g: Graph, u_mask: int, s: int, u_edges: int):
    u_graph = canonical(g.induced(bit_indices(u_mask)))
    if u_graph.order <= MAX_EXACT_U_ORDER:
        cost = _trianglefree_edits(u_graph, u_edges)
        if cost is None:
            raise ConstructionError(f"No triangle-free graph on {u_graph.order} vertices has {u_edges} edges")
        return cost, cost
    return abs(u_graph.edge_count - u_edges), _bipartite_edits(u_graph, s)


def _exact(g: Graph, parts: List[int]) -> EditBracket:
    n = g.order
    s, t = parts[0], len(parts) - 1
    u_size = parts[-2] + parts[-1]
    u_edges = parts[-2] * parts[-1]
    total = g.edge_count
    best_lower = best_upper = None
    for blocks in partitions(n, [u_size] + [s] * (t - 1), distinct_first=True):
        u_mask = blocks[0]
        # U is a single block of the shell; its interior is scored separately
        shell = multipartite_edits(g.rows, blocks, total) - edges_inside(g.rows, u_mask)
        lower, upper = _u_bracket(g, u_mask, s, u_edges)
        if best_lower is None or shell + lower < best_lower:
            best_lower = shell + lower
        if best_upper is None or shell + upper < best_upper:
            best_upper = shell + upper
        if best_upper == 0:
            break
    pairs = comb(n, 2) or 1
    return EditBracket(Fraction(best_lower, pairs), Fraction(best_upper, pairs), best_lower == best_upper,
                       best_lower, best_upper, parts)


def degree_lower_bound(g: Graph, parts: List[int]) -> int:
    """Half the total distance of each degree from the degrees a family member allows."""
    n = g.order
    s, t = parts[0], len(parts) - 1
    u_size = parts[-2] + parts[-1]
    total = 0
    for d in g.degrees():
        options = []
        if t > 1:
            options.append(abs(d - (n - s)))
        low, high = n - u_size, n - 1
        options.append(max(0, low - d, d - high))
        total += min(options)
    return (total + 1) // 2


def anneal_assignment(g: Graph, sizes: Sequence[int], iters: int = 20000, seed: int = DEFAULT_SEED) -> int:
    """Simulated annealing over vertex swaps; returns the best edit count to K(sizes) found."""
    n = g.order
    rng = np.random.default_rng(seed)
    label = np.repeat(np.arange(len(sizes)), sizes)
    rng.shuffle(label)
    masks = [0] * len(sizes)
    for v, p in enumerate(label):
        masks[p] |= 1 << v
    rows = g.rows
    cost = multipartite_edits(rows, masks, g.edge_count)
    best = cost
    if len(sizes) < 2 or n < 2:
        return best
    temperature, cooling = 1.0, (0.01 / 1.0) ** (1.0 / max(1, iters))
    for _ in range(iters):
        u, v = (int(x) for x in rng.integers(n, size=2))
        p, q = int(label[u]), int(label[v])
        draw = rng.random()
        temperature *= cooling
        if p == q:
            continue
        adjacent = rows[u] >> v & 1
        gain = ((rows[u] & masks[q]).bit_count() - adjacent + (rows[v] & masks[p]).bit_count() - adjacent
                - (rows[u] & masks[p]).bit_count() - (rows[v] & masks[q]).bit_count())
        delta = 2 * gain
        if delta <= 0 or draw < math.exp(-delta / temperature):
            masks[p] ^= (1 << u) | (1 << v)
            masks[q] ^= (1 << u) | (1 << v)
            label[u], label[v] = q, p
            cost += delta
            best = min(best, cost)
    return best


def _heuristic(g: Graph, parts: List[int], iters: int, seed: int) -> EditBracket:
    n = g.order
    family_edges = elementary_symmetric(parts, 2)
    lower = max(abs(g.edge_count - family_edges), degree_lower_bound(g, parts))
    upper = anneal_assignment(g, parts, iters, seed)
    pairs = comb(n, 2) or 1
    if lower != upper:
        logger.warning(
            f"Edit distance bracket not tight for n={n}",
            extra={'context': json.dumps({'lower': lower, 'upper': upper, 'parts': parts})}
        )
    return EditBracket(Fraction(lower, pairs), Fraction(upper, pairs), lower == upper, lower, upper, parts)


def edit_distance_to_family(g: Graph, a: float, mode: str = "auto", iters: int = 20000,
                            seed: int = DEFAULT_SEED) -> EditBracket:
    """Normalized adjacency changes needed to land in the extremal family at density ``a``.

    Raises:
        DomainError: for an unknown mode or a density outside [0, 1)
        OrderLimitError: exact mode above the exact-order cap, or any mode above the local cap
    """
    if mode not in MODES:
        raise DomainError(f"Unknown mode {mode!r}; expected one of {MODES}")
    n = g.order
    if n > MAX_LOCAL_ORDER:
        raise OrderLimitError(f"Edit distance supports up to {MAX_LOCAL_ORDER} vertices, got {n}")
    if mode == "exact" and n > MAX_EXACT_EDIT_ORDER:
        raise OrderLimitError(f"Exact edit distance supports up to {MAX_EXACT_EDIT_ORDER} vertices, got {n}")
    parts = part_sizes(a, n)
    if mode == "heuristic" or (mode == "auto" and n > MAX_EXACT_EDIT_ORDER):
        bracket = _heuristic(g, parts, iters, seed)
    else:
        bracket = _exact(g, parts)
    logger.debug(f"Edit distance to family a={a}, n={n}: [{bracket.lower}, {bracket.upper}]")
    return bracket


def turan_distance(g: Graph, t: int) -> int:
    """Exact adjacency changes from ``g`` to the closest labeling of T_t(n)."""
    n = g.order
    if n > MAX_EXACT_EDIT_ORDER:
        raise OrderLimitError(f"Exact Turán distance supports up to {MAX_EXACT_EDIT_ORDER} vertices, got {n}")
    sizes = turan_sizes(t, n)
    total = g.edge_count
    return min(multipartite_edits(g.rows, blocks, total) for blocks in partitions(n, sizes))
