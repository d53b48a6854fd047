import networkx as nx
import pytest
from hypothesis import given, settings

from core.errors import PreconditionError
from core.graph import (Graph, clique_count, complement, complete_graph, complete_multipartite, cycle_graph,
                        disjoint_union, empty_graph, from_edges, from_networkx, graph_join, is_triangle_free,
                        star_graph, to_networkx, triangle_count, turan_graph, turan_sizes)
from tests.utils.fixtures import graphs, nx_triangles

pytestmark = pytest.mark.unit


def test_basic_counts(small_graphs):
    k4 = small_graphs["K4"]
    assert k4.edge_count == 6
    assert k4.degrees() == [3, 3, 3, 3]
    assert triangle_count(k4) == 4
    assert clique_count(k4, 4) == 1
    assert triangle_count(small_graphs["C5"]) == 0


def test_rows_must_be_symmetric():
    with pytest.raises(PreconditionError):
        Graph(2, (0b10, 0))
    with pytest.raises(PreconditionError):
        Graph(1, (0b1,))


def test_induced_relabels_in_given_order(small_graphs):
    paw = small_graphs["paw"]
    sub = paw.induced([3, 2, 0])
    assert sub.edges() == [(0, 1), (1, 2)]


def test_turan_graph():
    assert turan_sizes(3, 7) == [3, 2, 2]
    t = turan_graph(3, 6)
    assert t.edge_count == 12
    assert triangle_count(t) == 8
    assert complete_multipartite([2, 2, 2]) == t


def test_complement_and_union():
    claw = star_graph(3)
    anti = complement(claw)
    assert anti.edge_count == 3
    assert triangle_count(anti) == 1
    union = disjoint_union([complete_graph(2), empty_graph(1)])
    assert union.order == 3 and union.edge_count == 1


def test_join_of_independent_sets_is_multipartite():
    assert graph_join([empty_graph(2), empty_graph(3)]) == complete_multipartite([2, 3])


def test_graphs_above_canonical_cap_are_allowed():
    g = cycle_graph(40)
    assert g.edge_count == 40
    assert is_triangle_free(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_order=8))
def test_triangle_count_matches_networkx(g):
    assert triangle_count(g) == nx_triangles(g)
    assert is_triangle_free(g) == (nx_triangles(g) == 0)


@settings(max_examples=30, deadline=None)
@given(graphs(max_order=8))
def test_networkx_round_trip(g):
    assert from_networkx(to_networkx(g)) == g


def test_from_networkx_relabels_nodes():
    graph = nx.Graph([("a", "b"), ("b", "c")])
    assert from_networkx(graph) == from_edges(3, [(0, 1), (1, 2)])
