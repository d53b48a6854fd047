from fractions import Fraction
from math import comb

import pytest

from core.density import subgraph_density
from core.enumeration import enumerate_graphs
from core.errors import ConstructionError, OrderLimitError
from core.graph import (complete_graph, complete_multipartite, count_cliques, cycle_graph, empty_graph, from_edges,
                        is_triangle_free, triangle_count)
from extremal.curves import h3, k41_lower_bound, link_edge_density, params
from extremal.family import (HFamilySpec, construct_H, elementary_symmetric, h_statistics, multipartite_count,
                             multipartite_density, multipartite_parts, part_sizes, vertex_clique_density,
                             vertex_profiles)

pytestmark = pytest.mark.unit


def test_part_sizes():
    assert part_sizes(0.7, 200) == [62, 62, 62, 14]
    assert part_sizes(0.7, 12) == [3, 3, 3, 3]
    assert part_sizes(0.8, 400) == [80] * 5 + [0]
    assert sum(part_sizes(0.8, 101)) == 101


def test_statistics_at_two_hundred():
    stats = h_statistics(HFamilySpec(0.7, 200))
    assert stats.edges == 14136
    assert stats.edge_density == Fraction(14136, 19900)
    assert stats.triangles == elementary_symmetric([62, 62, 62, 14], 3)


@pytest.mark.parametrize("a", [0.7, 0.8])
@pytest.mark.parametrize("n", [100, 200, 400, 800])
def test_construction_converges(a, n):
    stats = h_statistics(HFamilySpec(a, n))
    assert abs(float(stats.edge_density) - a) <= 3 / n
    assert abs(float(stats.triangle_density) - h3(a)) <= 6 / n


def test_construct_matches_statistics():
    spec = HFamilySpec(0.7, 14)
    g = construct_H(spec)
    stats = h_statistics(spec)
    assert g.edge_count == stats.edges
    assert triangle_count(g) == stats.triangles


def test_u_graph_variant():
    # n = 10 at a = 0.6: parts [4, 4, 2], U carries 8 edges on 6 vertices
    parts = part_sizes(0.6, 10)
    assert parts == [4, 4, 2]
    u_order, u_edges = parts[-2] + parts[-1], parts[-2] * parts[-1]
    u_graph = from_edges(u_order, [(i, j) for i in range(2) for j in range(2, 6)])
    assert u_graph.edge_count == u_edges
    g = construct_H(HFamilySpec(0.6, 10, u_graph))
    assert g.edge_count == h_statistics(HFamilySpec(0.6, 10)).edges
    with pytest.raises(ConstructionError):
        construct_H(HFamilySpec(0.6, 10, cycle_graph(6)))


def test_construct_order_cap():
    with pytest.raises(OrderLimitError):
        construct_H(HFamilySpec(0.7, 600))


def test_multipartite_parts():
    assert sorted(multipartite_parts(complete_graph(3))) == [1, 1, 1]
    assert sorted(multipartite_parts(from_edges(3, [(0, 1), (0, 2)]))) == [1, 2]
    assert multipartite_parts(cycle_graph(5)) is None
    assert multipartite_parts(empty_graph(3)) == [3]


def test_multipartite_density_matches_direct_count():
    sizes = [3, 2, 2]
    host = complete_multipartite(sizes)
    for f in enumerate_graphs(4):
        assert multipartite_density(f, sizes) == subgraph_density(f, host)
    assert multipartite_count(cycle_graph(5), sizes) == 0


def test_vertex_clique_density():
    assert vertex_clique_density([1, 1, 1], 0, 3) == 1
    assert vertex_clique_density([2, 2], 0, 2) == Fraction(2, 3)


def test_vertex_profiles_are_consistent():
    p = params(0.7)
    profiles = vertex_profiles(0.7)
    assert len(profiles) == 4
    offsets = [pr.k3 - 2 / 3 * p.hprime * pr.x for pr in profiles]
    for pr in profiles:
        assert pr.link_density == pytest.approx(link_edge_density(pr.z, p.mu), abs=1e-9)
    assert max(offsets) - min(offsets) < 1e-9


def test_default_member_is_triangle_free_on_u():
    g = construct_H(HFamilySpec(0.55, 12))
    parts = part_sizes(0.55, 12)
    assert len(parts) == 3
    assert is_triangle_free(g.induced(range(parts[0], 12)))


def test_k41_bound_against_vertex_counts_at_two_hundred():
    a, n = 0.76, 200
    p = params(a)
    assert p.t == 4
    g = construct_H(HFamilySpec(a, n))
    representatives = {}
    for v, d in enumerate(g.degrees()):
        representatives.setdefault(d, v)
    # one vertex from the large parts and one from the small part
    assert len(representatives) == 2
    for d, v in representatives.items():
        observed = count_cliques(g.rows, 3, g.rows[v]) / comb(n - 1, 3)
        assert k41_lower_bound(p, d / (n - 1)) <= observed + 5 / n


def test_k41_bound_is_tight_on_the_limit():
    p = params(0.76)
    for profile in vertex_profiles(0.76):
        assert k41_lower_bound(p, profile.x) == pytest.approx(profile.k4, abs=1e-9)
