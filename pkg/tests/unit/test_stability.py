import pytest

from core.canonical import are_isomorphic
from core.enumeration import graphs_by_edges
from core.errors import DomainError, OrderLimitError
from core.graph import turan_graph
from search.stability import stability_probe

pytestmark = pytest.mark.unit


def test_goodman_equality_at_six():
    report = stability_probe(6, 3, 0.0)
    assert report.m == 12
    assert report.threshold == pytest.approx(8.0)
    assert len(report.entries) == 1
    entry = report.entries[0]
    assert entry.triangles == 8
    assert entry.distance == 0
    assert are_isomorphic(entry.graph, turan_graph(3, 6))


@pytest.mark.slow
def test_triangle_free_extremal_at_eight():
    report = stability_probe(8, 2, 0.0, m=16)
    assert len(report.entries) == 1
    assert report.max_distance == 0


def test_large_delta_keeps_every_graph():
    report = stability_probe(5, 2, 1.0)
    assert len(report.entries) == len(graphs_by_edges(5, 6))
    assert report.max_distance > 0
    assert all(0 <= e.normalized() <= 1 for e in report.entries)


def test_errors():
    with pytest.raises(OrderLimitError):
        stability_probe(9, 2, 0.0)
    with pytest.raises(DomainError):
        stability_probe(5, 0, 0.0)
    with pytest.raises(DomainError):
        stability_probe(5, 2, -0.1)
    with pytest.raises(DomainError):
        stability_probe(5, 2, 0.0, m=11)
