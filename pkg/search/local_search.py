"""Edge-swap hill climbing for few triangles at a fixed edge count.

A move deletes one edge and inserts one non-edge, so the edge count never
changes. The triangle delta of a move is read off common-neighbourhood bit
intersections, which keeps a move O(n / wordsize) even at n = 512.
"""

import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import List, Sequence, Tuple

import numpy as np

from core.config import DEFAULT_SEED, DEFAULT_THREADS, MAX_LOCAL_ORDER
from core.errors import DomainError, OrderLimitError
from core.graph import Graph, count_cliques
from extremal.family import HFamilySpec, construct_H

logger = logging.getLogger(__name__)

# random numbers are drawn in fixed-size blocks so a longer run replays a shorter one
_BLOCK = 1024


@dataclass
class LocalSearchResult:
    n: int
    m: int
    count: int
    seeded_count: int
    accepted: int
    restart: int
    graph: Graph

    @property
    def density(self) -> Fraction:
        return Fraction(self.count, comb(self.n, 3)) if self.n >= 3 else Fraction(0)


def _pairs(rows: Sequence[int], adjacent: bool) -> List[Tuple[int, int]]:
    n = len(rows)
    return [(u, v) for u in range(n) for v in range(u + 1, n) if bool(rows[u] >> v & 1) == adjacent]


def _common(rows: Sequence[int], u: int, v: int) -> int:
    return (rows[u] & rows[v]).bit_count()


def _add(rows: List[int], u: int, v: int):
    rows[u] |= 1 << v
    rows[v] |= 1 << u


def _remove(rows: List[int], u: int, v: int):
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)


def family_seed(n: int, m: int) -> List[int]:
    """Rows of the extremal family member at density m/C(n,2), greedily trimmed or filled to m edges."""
    total = comb(n, 2)
    if m == total:
        return [((1 << n) - 1) & ~(1 << v) for v in range(n)]
    rows = list(construct_H(HFamilySpec(m / total, n)).rows)
    edges = sum(row.bit_count() for row in rows) // 2
    if edges > m:
        # drop the edges sitting in the most triangles
        ranked = sorted(_pairs(rows, True), key=lambda p: -_common(rows, *p))
        for u, v in ranked[:edges - m]:
            _remove(rows, u, v)
    elif edges < m:
        ranked = sorted(_pairs(rows, False), key=lambda p: _common(rows, *p))
        for u, v in ranked[:m - edges]:
            _add(rows, u, v)
    return rows


def random_rows(n: int, m: int, rng: np.random.Generator) -> List[int]:
    rows = [0] * n
    pairs = _pairs(rows, False)
    for index in rng.choice(len(pairs), size=m, replace=False):
        _add(rows, *pairs[int(index)])
    return rows


def _perturb(rows: List[int], swaps: int, rng: np.random.Generator) -> List[int]:
    rows = list(rows)
    edges, gaps = _pairs(rows, True), _pairs(rows, False)
    if not edges or not gaps:
        return rows
    for _ in range(swaps):
        i, j = int(rng.integers(len(edges))), int(rng.integers(len(gaps)))
        (u, v), (x, y) = edges[i], gaps[j]
        _remove(rows, u, v)
        _add(rows, x, y)
        edges[i], gaps[j] = (x, y), (u, v)
    return rows


def hill_climb(rows: List[int], iters: int, rng: np.random.Generator) -> Tuple[int, List[int], int]:
    """Non-increasing swap search from ``rows``; returns (best count, best rows, accepted moves)."""
    rows = list(rows)
    count = count_cliques(rows, 3)
    best, best_rows = count, list(rows)
    edges, gaps = _pairs(rows, True), _pairs(rows, False)
    accepted = 0
    if not edges or not gaps:
        return best, best_rows, accepted

    done = 0
    while done < iters:
        edge_draws = rng.integers(len(edges), size=_BLOCK)
        gap_draws = rng.integers(len(gaps), size=_BLOCK)
        for k in range(min(_BLOCK, iters - done)):
            i, j = int(edge_draws[k]), int(gap_draws[k])
            (u, v), (x, y) = edges[i], gaps[j]
            loss = _common(rows, u, v)
            _remove(rows, u, v)
            delta = _common(rows, x, y) - loss
            if delta <= 0:
                _add(rows, x, y)
                edges[i], gaps[j] = (x, y), (u, v)
                count += delta
                accepted += 1
                if count < best:
                    best, best_rows = count, list(rows)
            else:
                _add(rows, u, v)
        done += _BLOCK
    return best, best_rows, accepted


def _restart(args) -> Tuple[int, int, int, int, List[int]]:
    index, n, m, iters, entropy = args
    rng = np.random.default_rng(entropy)
    if index == 0:
        start = family_seed(n, m)
    elif index % 2:
        start = _perturb(family_seed(n, m), max(1, n // 4), rng)
    else:
        start = random_rows(n, m, rng)
    seeded = count_cliques(start, 3)
    best, rows, accepted = hill_climb(start, iters, rng)
    return index, best, seeded, accepted, rows


def local_min(
    n: int,
    m: int,
    iters: int = 20000,
    seed: int = DEFAULT_SEED,
    restarts: int = 4,
    threads: int = DEFAULT_THREADS,
) -> LocalSearchResult:
    """Fewest triangles found over graphs with n vertices and m edges.

    Restart 0 starts from the extremal family member, odd restarts from a
    perturbed member and the rest from uniform random graphs. Each restart
    gets its own child seed, so the result does not depend on ``threads``.

    Raises:
        OrderLimitError: if n exceeds the local-search cap
        DomainError: if m, iters or restarts are out of range
    """
    if not 1 <= n <= MAX_LOCAL_ORDER:
        raise OrderLimitError(f"Local search supports 1..{MAX_LOCAL_ORDER} vertices, got {n}")
    if not 0 <= m <= comb(n, 2):
        raise DomainError(f"Edge count {m} outside [0, {comb(n, 2)}]")
    if iters < 0 or restarts < 1:
        raise DomainError(f"Need iters >= 0 and restarts >= 1, got iters={iters}, restarts={restarts}")

    started = time.perf_counter()
    children = np.random.SeedSequence(seed).spawn(restarts)
    jobs = [(i, n, m, iters, children[i]) for i in range(restarts)]
    if threads > 1 and restarts > 1:
        with ProcessPoolExecutor(max_workers=min(threads, restarts)) as pool:
            outcomes = list(pool.map(_restart, jobs))
    else:
        outcomes = [_restart(job) for job in jobs]

    seeded_count = next(o[2] for o in outcomes if o[0] == 0)
    index, best, _, accepted, rows = min(outcomes, key=lambda o: (o[1], o[0]))
    result = LocalSearchResult(n, m, best, seeded_count, accepted, index, Graph(n, tuple(rows)))
    logger.info(
        f"Local search n={n}, m={m}: {best} triangles in {time.perf_counter() - started:.2f}s",
        extra={'context': json.dumps({'seed': seed, 'restarts': restarts, 'iters': iters,
                                      'winner': index, 'seeded': seeded_count})}
    )
    return result

