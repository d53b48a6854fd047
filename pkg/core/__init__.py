"""Graph core: representation, canonical forms, enumeration and densities."""

from core.graph import Graph, clique_count, complement, graph_join, turan_graph
from core.canonical import canonical
from core.enumeration import enumerate_graphs
from core.density import DensityVector, subgraph_density
from core.graph6 import emit_graph6, parse_graph6

__all__ = [
    "Graph",
    "DensityVector",
    "canonical",
    "clique_count",
    "complement",
    "emit_graph6",
    "enumerate_graphs",
    "graph_join",
    "parse_graph6",
    "subgraph_density",
    "turan_graph",
]
