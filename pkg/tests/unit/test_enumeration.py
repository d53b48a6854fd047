import pytest

from core.canonical import canonical
from core.enumeration import enumerate_graphs, graphs_by_edges
from core.errors import OrderLimitError

pytestmark = pytest.mark.unit


@pytest.mark.parametrize("order, expected", [(1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156)])
def test_isomorphism_class_counts(order, expected):
    assert len(enumerate_graphs(order)) == expected


@pytest.mark.slow
def test_seven_vertex_classes():
    assert len(enumerate_graphs(7)) == 1044


def test_representatives_are_canonical_and_distinct():
    graphs = enumerate_graphs(5)
    assert all(canonical(g) == g for g in graphs)
    assert len(set(graphs)) == len(graphs)


def test_sorted_by_edge_count():
    counts = [g.edge_count for g in enumerate_graphs(5)]
    assert counts == sorted(counts)


def test_graphs_by_edges():
    assert len(graphs_by_edges(4, 3)) == 3
    assert len(graphs_by_edges(5, 10)) == 1


@pytest.mark.parametrize("order", [0, 11])
def test_order_limits(order):
    with pytest.raises(OrderLimitError):
        enumerate_graphs(order)
