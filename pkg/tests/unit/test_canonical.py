import pytest
from hypothesis import given, settings

from core.canonical import (are_isomorphic, automorphism_count, canonical, canonical_labeled, is_canonical,
                            orbit_partition)
from core.errors import OrderLimitError
from core.graph import complete_graph, cycle_graph, empty_graph, path_graph, star_graph
from tests.utils.fixtures import graphs, graphs_with_permutation, nx_isomorphic

pytestmark = pytest.mark.unit


@settings(max_examples=80, deadline=None)
@given(graphs_with_permutation(max_order=8))
def test_canonical_form_is_relabeling_invariant(case):
    g, order = case
    assert canonical(g.permuted(order)) == canonical(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_order=6), graphs(max_order=6))
def test_isomorphism_agrees_with_networkx(g, h):
    if g.order == h.order:
        assert are_isomorphic(g, h) == nx_isomorphic(g, h)


@settings(max_examples=40, deadline=None)
@given(graphs(max_order=7))
def test_canonical_is_idempotent(g):
    assert is_canonical(canonical(g))


def test_automorphism_counts():
    assert automorphism_count(complete_graph(4)) == 24
    assert automorphism_count(cycle_graph(5)) == 10
    assert automorphism_count(path_graph(4)) == 2
    assert automorphism_count(star_graph(3)) == 6
    assert automorphism_count(empty_graph(3)) == 6


def test_labeled_canonical_keeps_labels_first():
    p4 = path_graph(4)
    # the two middle vertices of P4 are equivalent, the end vertices are not
    assert canonical_labeled(p4, (1, 2)) == canonical_labeled(p4, (2, 1))
    assert canonical_labeled(p4, (0, 1)) != canonical_labeled(p4, (1, 2))


def test_orbit_partition_of_path():
    orbits = orbit_partition(path_graph(4))
    assert orbits == {0: 0, 1: 1, 2: 1, 3: 0}


def test_order_cap():
    with pytest.raises(OrderLimitError):
        canonical(cycle_graph(17))
