import pytest

from core.enumeration import enumerate_graphs
from core.errors import DomainError, OrderLimitError, PreconditionError
from core.graph import complete_graph, cycle_graph, empty_graph
from extremal.curves import h3, h_r
from extremal.joins import (PsiKind, PsiSpec, bipartite_limit, blowup_limit, clique_densities, compare_join_forms,
                            construction_convergence, construction_gap, edge_weighted_gap, join_eval, phi_member,
                            psi_evaluator, required_psi_density, vertex_linearity_gap, zero_hom)

pytestmark = pytest.mark.unit


@pytest.mark.parametrize("beta", [0.1, 0.3, 0.5])
def test_bipartite_limit_closed_forms(beta):
    assert bipartite_limit(beta, complete_graph(2)) == pytest.approx(2 * beta * (1 - beta), abs=1e-12)
    assert bipartite_limit(beta, cycle_graph(4)) == pytest.approx(6 * beta ** 2 * (1 - beta) ** 2, abs=1e-12)
    assert bipartite_limit(beta, complete_graph(3)) == 0.0


def test_bipartite_limit_sums_to_one():
    total = sum(bipartite_limit(0.3, g) for g in enumerate_graphs(4))
    assert total == pytest.approx(1.0, abs=1e-12)


def test_labeled_join_matches_blowup():
    rows = compare_join_forms(enumerate_graphs(4))
    assert not any(row.labeled_mismatch for row in rows)
    # the unlabeled normalization undercounts edgeless patterns
    assert any(row.literal_mismatch for row in rows)


def test_blowup_of_triangle_counts_triangles():
    weights = [0.2, 0.3, 0.5]
    assert blowup_limit(complete_graph(3), weights, complete_graph(3)) == pytest.approx(6 * 0.2 * 0.3 * 0.5)


def test_join_argument_errors():
    with pytest.raises(DomainError):
        join_eval([zero_hom], [0.5], complete_graph(2))
    with pytest.raises(DomainError):
        join_eval([zero_hom, zero_hom], [0.5], complete_graph(2))
    with pytest.raises(OrderLimitError):
        join_eval([zero_hom, zero_hom], [0.5, 0.5], empty_graph(9))
    with pytest.raises(DomainError):
        bipartite_limit(1.5, complete_graph(2))


@pytest.mark.parametrize("a", [0.55, 0.7, 0.76])
def test_phi_member_matches_curve(a):
    vector = phi_member(a, level=4)
    assert sum(vector.values.values()) == pytest.approx(1.0, abs=1e-9)
    cliques = clique_densities(vector, 3)
    assert cliques[2] == pytest.approx(a, abs=1e-9)
    assert cliques[3] == pytest.approx(h3(a), abs=1e-9)


def test_blowup_psi_keeps_clique_densities():
    spec = PsiSpec(PsiKind.BLOWUP, cycle_graph(5))
    vector = phi_member(0.55, spec, level=5)
    assert clique_densities(vector, 3)[3] == pytest.approx(h3(0.55), abs=1e-9)
    # a bipartite last part carries no five-cycle
    assert phi_member(0.55, level=5)[cycle_graph(5)] == 0.0
    assert vector[cycle_graph(5)] > 0


def test_psi_domain_errors():
    with pytest.raises(DomainError):
        psi_evaluator(PsiSpec(), 0.6)
    with pytest.raises(DomainError):
        psi_evaluator(PsiSpec(PsiKind.BLOWUP, complete_graph(3)), 0.1)
    with pytest.raises(DomainError):
        psi_evaluator(PsiSpec(PsiKind.BLOWUP, empty_graph(3)), 0.1)
    assert 0 < required_psi_density(0.7) <= 0.5


def test_phi_member_level_bounds():
    with pytest.raises(OrderLimitError):
        phi_member(0.7, level=9)
    with pytest.raises(PreconditionError):
        clique_densities(phi_member(0.7, level=3), 4)


def test_construction_converges():
    assert construction_gap(0.7, 400) <= 10 / 400


@pytest.mark.parametrize("a", [0.55, 0.7])
def test_vertex_and_edge_identities(a):
    assert vertex_linearity_gap(a) == pytest.approx(0.0, abs=1e-9)
    assert edge_weighted_gap(a) <= 1e-9


@pytest.mark.parametrize("a", [0.55, 0.7, 0.76, 0.8])
def test_level_five_vector_reads_smaller_cliques(a):
    vector = phi_member(a, level=5)
    assert vector.clique(2) == pytest.approx(a, abs=1e-9)
    assert vector[complete_graph(2)] == pytest.approx(a, abs=1e-9)
    assert vector.clique(3) == pytest.approx(h3(a), abs=1e-9)
    assert vector.clique(4) == pytest.approx(h_r(a, 4), abs=1e-9)
    cliques = clique_densities(vector, 5)
    assert cliques[5] == pytest.approx(h_r(a, 5), abs=1e-9)


def test_construction_rate_and_extrapolation():
    convergence = construction_convergence(0.7, 400)
    assert sorted(convergence.gaps) == [100, 200, 400]
    assert convergence.rate_ok, convergence.gaps
    assert convergence.extrapolation_ok, convergence.extrapolated
    assert convergence.gaps[400] == pytest.approx(construction_gap(0.7, 400), abs=1e-15)


def test_construction_convergence_needs_room():
    with pytest.raises(PreconditionError):
        construction_convergence(0.7, 3)
