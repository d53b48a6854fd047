"""Built-in flag types and the averaging operators supported between them."""

from dataclasses import dataclass
from enum import Enum
from typing import Dict, Set, Tuple

from core.graph import Graph, complete_graph, empty_graph, from_edges


class TypeName(Enum):
    EMPTY = "0"
    VERTEX = "1"
    EDGE = "E"
    SIGMA = "sigma"


@dataclass(frozen=True)
class TypeSigma:
    """A fully labeled graph; label i sits on vertex i."""
    name: str
    graph: Graph

    @property
    def arity(self) -> int:
        return self.graph.order

    def __repr__(self) -> str:
        return f"Type({self.name})"


TYPE_0 = TypeSigma(TypeName.EMPTY.value, empty_graph(0))
TYPE_1 = TypeSigma(TypeName.VERTEX.value, empty_graph(1))
TYPE_E = TypeSigma(TypeName.EDGE.value, complete_graph(2))
# complement of the 3-vertex path: labels 1 and 2 adjacent, label 3 isolated
TYPE_SIGMA = TypeSigma(TypeName.SIGMA.value, from_edges(3, [(0, 1)]))

TYPES: Dict[TypeName, TypeSigma] = {
    TypeName.EMPTY: TYPE_0,
    TypeName.VERTEX: TYPE_1,
    TypeName.EDGE: TYPE_E,
    TypeName.SIGMA: TYPE_SIGMA,
}

SUPPORTED_AVERAGING: Set[Tuple[str, str]] = {
    (TYPE_1.name, TYPE_0.name),
    (TYPE_E.name, TYPE_0.name),
    (TYPE_E.name, TYPE_1.name),
    (TYPE_SIGMA.name, TYPE_0.name),
}


def type_by_name(name: str) -> TypeSigma:
    return TYPES[TypeName(name)]
