"""The exceptional five-vertex graphs and the exhaustive case check around them."""

import logging
from itertools import combinations, product
from typing import List, Tuple

from core.canonical import are_isomorphic, canonical
from core.graph import Graph, complement, from_edges, star_graph

logger = logging.getLogger(__name__)

# vertex positions in the five-vertex configuration
X1, X2, X3, Y, Z = range(5)

_BASE_EDGES = [(X1, X2), (Y, X1), (Y, X2), (Y, X3)]


def g1_g2() -> Tuple[Graph, Graph]:
    """G1 has z adjacent to x1 only; G2 additionally joins z and x3."""
    g1 = from_edges(5, _BASE_EDGES + [(Z, X1)])
    g2 = from_edges(5, _BASE_EDGES + [(Z, X1), (Z, X3)])
    return g1, g2


def anti_claw() -> Graph:
    """Complement of K_{1,3}: a triangle plus an isolated vertex."""
    return complement(star_graph(3))


def contains_anti_claw(g: Graph) -> bool:
    target = canonical(anti_claw())
    return any(canonical(g.induced(subset)) == target for subset in combinations(range(g.order), 4))


def configuration_cases() -> List[Graph]:
    """Every labeled graph on (x1, x2, x3, y, z) meeting the hypothesis.

    x1x2 is the only edge among the x's, y sees every x, yz is a non-edge and
    z misses at least one x.
    """
    cases = []
    for bits in product((0, 1), repeat=3):
        if all(bits):
            continue
        extra = [(Z, x) for x, bit in zip((X1, X2, X3), bits) if bit]
        cases.append(from_edges(5, _BASE_EDGES + extra))
    return cases


def verify_5comb() -> bool:
    """Check that each hypothesis case contains an induced anti-claw or is G1 or G2."""
    g1, g2 = g1_g2()
    failures = []
    for g in configuration_cases():
        if contains_anti_claw(g) or are_isomorphic(g, g1) or are_isomorphic(g, g2):
            continue
        failures.append(g)
    if failures:
        logger.error(f"Five-vertex case check failed on {len(failures)} configurations: {failures}")
        return False
    logger.info("Five-vertex case check passed on all configurations")
    return True
