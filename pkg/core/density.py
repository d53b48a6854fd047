"""Exact induced-subgraph densities and density vectors."""

import logging
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Union

from core.canonical import canonical
from core.config import NUMERIC_TOLERANCE
from core.enumeration import enumerate_graphs
from core.errors import PreconditionError
from core.graph import Graph, clique_count, complete_graph

logger = logging.getLogger(__name__)

Number = Union[Fraction, float]


@lru_cache(maxsize=20_000)
def induced_profile(g: Graph, size: int) -> Dict[Graph, int]:
    """Number of ``size``-subsets of V(g) inducing each canonical graph."""
    if size > g.order:
        raise PreconditionError(f"Cannot take {size}-subsets of a {g.order}-vertex graph")
    counts: Counter = Counter()
    for subset in combinations(range(g.order), size):
        counts[canonical(g.induced(subset))] += 1
    return dict(counts)


def subgraph_density(f: Graph, g: Graph) -> Fraction:
    """Probability that a random |V(f)|-subset of V(g) induces a copy of ``f``.

    Raises:
        PreconditionError: if ``f`` has more vertices than ``g``
    """
    if f.order > g.order:
        raise PreconditionError(f"Pattern has {f.order} vertices but host only {g.order}")
    profile = induced_profile(g, f.order)
    return Fraction(profile.get(canonical(f), 0), comb(g.order, f.order))


def clique_density(g: Graph, r: int) -> Fraction:
    return Fraction(clique_count(g, r), comb(g.order, r))


@dataclass(frozen=True)
class DensityVector:
    """Densities of every graph on ``level`` vertices, keyed by canonical graph."""
    level: int
    values: Dict[Graph, Number] = field(hash=False)
    exact: bool = True

    def __post_init__(self):
        total = sum(self.values.values())
        if any(v < 0 for v in self.values.values()):
            raise PreconditionError("Density vector has a negative entry")
        if self.exact and total != 1:
            raise PreconditionError(f"Exact density vector sums to {total}, not 1")
        if not self.exact and abs(float(total) - 1.0) > NUMERIC_TOLERANCE:
            raise PreconditionError(f"Density vector sums to {float(total)}, not 1")

    def __getitem__(self, g: Graph) -> Number:
        """Density of ``g``; graphs below the level are marginalized over the level's graphs.

        Raises:
            PreconditionError: if ``g`` has more vertices than the level
        """
        if g.order > self.level:
            raise PreconditionError(f"Vector of level {self.level} has no entry for a {g.order}-vertex graph")
        if g.order == self.level:
            return self.values.get(canonical(g), self._zero)
        return self._marginal(lambda host: subgraph_density(g, host))

    @property
    def _zero(self) -> Number:
        return Fraction(0) if self.exact else 0.0

    def _marginal(self, weight) -> Number:
        total = self._zero
        for host, value in self.values.items():
            if value:
                share = weight(host)
                total += share * value if self.exact else float(share) * value
        return total

    def clique(self, r: int) -> Number:
        if r > self.level:
            raise PreconditionError(f"Vector of level {self.level} has no K_{r} entry")
        if r == self.level:
            return self[complete_graph(r)]
        return self._marginal(lambda host: clique_density(host, r))


def density_vector(g: Graph, level: int) -> DensityVector:
    """Exact DensityVector of a finite graph at the given level."""
    profile = induced_profile(g, level)
    total = comb(g.order, level)
    values = {F: Fraction(profile.get(F, 0), total) for F in enumerate_graphs(level)}
    return DensityVector(level, values, exact=True)
