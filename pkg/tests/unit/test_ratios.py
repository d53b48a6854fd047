import numpy as np
import pytest

from core.errors import DomainError
from extremal.curves import c_of, h3
from search.ratios import RatioPoint, constraints, minimize_ratios, objective, perturbation_probe, polish

pytestmark = pytest.mark.unit


@pytest.fixture(scope="module")
def point_07():
    return minimize_ratios(0.7, starts=8, seed=0)


def test_optimum_matches_curve(point_07):
    assert point_07.objective == pytest.approx(h3(0.7) / 6, abs=1e-6)


def test_optimum_shape(point_07):
    c = c_of(0.7)
    assert point_07.c0 == pytest.approx(0.0, abs=1e-4)
    assert point_07.parts == pytest.approx([c, c, c, 1 - 3 * c], abs=1e-4)
    assert sum(point_07.weights) == pytest.approx(1.0, abs=1e-8)


def test_half_density_splits_evenly():
    point = minimize_ratios(0.5, starts=4, seed=1)
    assert point.objective == pytest.approx(0.0, abs=1e-9)
    assert point.parts[:2] == pytest.approx([0.5, 0.5], abs=1e-4)


def test_perturbation_increases_objective(point_07):
    probe = perturbation_probe(point_07, 0.7, eps=0.01)
    assert probe
    assert min(probe.values()) > 0


def test_polish_lands_on_constraints():
    x = polish(np.array([0.0, 0.4, 0.35, 0.25]), 0.6)
    assert np.max(np.abs(constraints(x, 0.6))) < 1e-10
    assert objective(np.array([0.0, 0.5, 0.5])) == pytest.approx(0.0, abs=1e-15)


def test_polish_keeps_weights_in_range_and_pinned_slack():
    x = polish(np.array([0.0, 0.4, 0.35, 0.25]), 0.6)
    assert x.min() >= 0.0
    assert x.sum() == pytest.approx(1.0, abs=1e-12)
    assert np.max(np.abs(constraints(x, 0.6))) < 1e-10
    pinned = polish(np.array([0.0, 0.4, 0.35, 0.25]), 0.6, free=[1, 2, 3])
    assert pinned[0] == 0.0
    assert np.max(np.abs(constraints(pinned, 0.6))) < 1e-10


def test_errors():
    with pytest.raises(DomainError):
        perturbation_probe(RatioPoint(0.0, [0.5, 0.5], 0.0), 0.5)
    with pytest.raises(DomainError):
        minimize_ratios(1.0)
