import math

import numpy as np
import pytest

from core.errors import DomainError, PreconditionError
from extremal.curves import (bound_36, c_of, c_residual, clique_vector, curve_checks, curve_checks_pass,
                             curve_table, goodman_bound, goodman_density, h3, h_r, h_t_explicit,
                             k41_lower_bound, kr_recursion_residual, link_edge_density, params, t_of)

pytestmark = pytest.mark.unit


@pytest.mark.parametrize("a, t", [(0.0, 1), (0.3, 1), (0.5, 2), (0.55, 2), (0.7, 3), (0.76, 4), (0.8, 5)])
def test_t_of(a, t):
    assert t_of(a) == t


def test_c_at_seven_tenths():
    assert c_of(0.7) == pytest.approx((3 + math.sqrt(0.6)) / 12, abs=1e-15)
    assert abs(c_residual(0.7)) < 1e-12


def test_h3_values():
    assert h3(0.5) == pytest.approx(0.0, abs=1e-15)
    assert h3(0.3) == 0.0
    assert h3(2 / 3) == pytest.approx(2 / 9, abs=1e-12)
    assert h3(0.7) / 6 == pytest.approx(0.047848, abs=1e-6)
    assert h_r(1.0, 3) == 1.0
    assert h_r(1.0, 1) == 1.0


def test_domain_errors():
    with pytest.raises(DomainError):
        t_of(1.0)
    with pytest.raises(DomainError):
        h3(-0.1)
    with pytest.raises(DomainError):
        params(0.3)
    with pytest.raises(DomainError):
        link_edge_density(0.0, 0.1)


def test_explicit_form_matches():
    for a in np.linspace(0.51, 0.98, 40):
        assert h_t_explicit(float(a), t_of(float(a))) == pytest.approx(h3(float(a)), abs=1e-12)


def test_goodman_bound():
    assert goodman_bound(3, 12, 6) == pytest.approx(8.0)
    assert goodman_bound(3, 9, 6) == pytest.approx(0.0)
    assert goodman_bound(3, 0, 5) == 0.0
    assert goodman_density(0.5) == 0.0
    assert goodman_density(2 / 3) == pytest.approx(2 / 9)
    with pytest.raises(DomainError):
        goodman_bound(3, 20, 6)


def test_goodman_below_h3():
    for a in np.linspace(0.0, 0.99, 100):
        assert goodman_density(float(a)) <= h3(float(a)) + 1e-12


def test_clique_recursion_residual():
    a = 0.76
    t, c = t_of(a), c_of(a)
    vec = clique_vector(a, t + 1)
    for r in range(3, t + 2):
        assert abs(kr_recursion_residual(vec, t, c, r)) < 1e-12
    with pytest.raises(PreconditionError):
        kr_recursion_residual({1: 1.0}, t, c, 3)


def test_params_and_eta():
    p = params(0.7)
    assert p.t == 3
    assert p.hprime == pytest.approx(6 * p.c)
    low, high = p.degree_window
    assert low == pytest.approx(p.B / p.A)
    for s, eta in p.eta.items():
        assert p.mu <= eta <= 2 * p.mu
        assert link_edge_density(eta, p.mu) == pytest.approx(1 - 1 / s, abs=1e-9)


def test_k41_bound_is_linear_in_x():
    p = params(0.7)
    low, high = p.degree_window
    mid = (low + high) / 2
    values = [k41_lower_bound(p, x) for x in (low, mid, high)]
    assert values[1] == pytest.approx((values[0] + values[2]) / 2)


def test_bound_36_domain():
    with pytest.raises(DomainError):
        bound_36(0.7, 1.5, 0.0)
    assert bound_36(0.7, 0.0, 0.0) > 0


def test_curve_table_shape():
    rows = curve_table(0.5, 0.9, 100)
    assert len(rows) == 100
    h = [row["h3"] for row in rows]
    assert all(y >= x - 1e-12 for x, y in zip(h, h[1:]))
    with pytest.raises(DomainError):
        curve_table(0.5, 0.9, 0)


def test_curve_checks_on_grid():
    worst = curve_checks(list(np.linspace(0.5005, 0.99, 200)))
    assert curve_checks_pass(worst), worst
