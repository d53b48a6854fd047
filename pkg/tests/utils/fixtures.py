"""Graph builders and independent oracles for tests."""

from itertools import combinations
from typing import List, Tuple

import networkx as nx
from hypothesis import strategies as st

from core.graph import Graph, from_edges, to_networkx


@st.composite
def graphs(draw, min_order: int = 1, max_order: int = 7) -> Graph:
    """Hypothesis strategy: an arbitrary labeled graph."""
    n = draw(st.integers(min_value=min_order, max_value=max_order))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return from_edges(n, [p for p, keep in zip(pairs, chosen) if keep])


@st.composite
def graphs_with_permutation(draw, min_order: int = 1, max_order: int = 7) -> Tuple[Graph, List[int]]:
    g = draw(graphs(min_order, max_order))
    order = draw(st.permutations(list(range(g.order))))
    return g, list(order)


def nx_triangles(g: Graph) -> int:
    return sum(nx.triangles(to_networkx(g)).values()) // 3


def nx_isomorphic(g: Graph, h: Graph) -> bool:
    return nx.is_isomorphic(to_networkx(g), to_networkx(h))


def nx_graph6(g: Graph) -> str:
    """graph6 of g exactly as labeled, produced by networkx."""
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return from_edges(g.order, g.edges() + [(u, v)])
