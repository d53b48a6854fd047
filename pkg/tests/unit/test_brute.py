from math import comb

import pytest

from core.canonical import are_isomorphic
from core.errors import DomainError, OrderLimitError
from core.graph import clique_count, complete_multipartite, is_triangle_free
from extremal.curves import goodman_bound
from search.brute import brute_curve, brute_min

pytestmark = pytest.mark.unit


@pytest.mark.parametrize("n, m, r, expected", [
    (6, 10, 3, 3),
    (5, 6, 3, 0),
    (4, 6, 3, 4),
    (5, 10, 4, 5),
    (6, 12, 3, 8),
])
def test_known_minima(n, m, r, expected):
    point = brute_min(n, m, r)
    assert point.min_count == expected
    assert all(clique_count(w, r) == expected for w in point.witnesses)
    assert all(w.edge_count == m for w in point.witnesses)


def test_turan_graph_is_unique_witness():
    point = brute_min(5, 6)
    assert len(point.witnesses) == 1
    assert are_isomorphic(point.witnesses[0], complete_multipartite([2, 3]))
    assert point.density == 0


@pytest.mark.parametrize("n", [4, 5, 6])
def test_curve_shape(n):
    points = brute_curve(n)
    assert [p.m for p in points] == list(range(comb(n, 2) + 1))
    counts = [p.min_count for p in points]
    assert counts == sorted(counts)
    mantel = n * n // 4
    assert counts[mantel] == 0
    assert counts[mantel + 1] == n // 2
    for p in points:
        assert p.min_count >= goodman_bound(3, p.m, n) - 1e-9
    assert all(is_triangle_free(w) for w in points[mantel].witnesses)


def test_parallel_curve_matches_serial():
    serial = brute_curve(5, threads=1)
    parallel = brute_curve(5, threads=2)
    assert [(p.m, p.min_count, len(p.witnesses)) for p in serial] == \
        [(p.m, p.min_count, len(p.witnesses)) for p in parallel]


def test_limits():
    with pytest.raises(OrderLimitError):
        brute_min(9, 0, max_n=8)
    with pytest.raises(OrderLimitError):
        brute_curve(0)
    with pytest.raises(DomainError):
        brute_min(4, 7)
    with pytest.raises(DomainError):
        brute_min(4, 3, r=5)


@pytest.mark.slow
def test_complete_graph_on_eight():
    assert brute_min(8, 28).min_count == 56
