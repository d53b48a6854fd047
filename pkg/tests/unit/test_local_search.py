import numpy as np
import pytest

from core.errors import DomainError, OrderLimitError
from core.graph import count_cliques, triangle_count
from search.local_search import family_seed, hill_climb, local_min, random_rows

pytestmark = pytest.mark.unit


def test_result_is_consistent():
    result = local_min(20, 120, iters=2000, seed=7)
    assert result.graph.edge_count == 120
    assert triangle_count(result.graph) == result.count
    assert result.count <= result.seeded_count
    assert 0 <= result.restart < 4
    assert result.density == pytest.approx(result.count / 1140)


def test_same_seed_same_result():
    first = local_min(16, 80, iters=1500, seed=3)
    second = local_min(16, 80, iters=1500, seed=3)
    assert first.count == second.count
    assert first.graph == second.graph


def test_longer_runs_never_do_worse():
    short = local_min(18, 100, iters=300, seed=11)
    long = local_min(18, 100, iters=3000, seed=11)
    assert long.count <= short.count


def test_threads_do_not_change_result():
    serial = local_min(14, 60, iters=1000, seed=5, threads=1)
    parallel = local_min(14, 60, iters=1000, seed=5, threads=2)
    assert serial.count == parallel.count
    assert serial.restart == parallel.restart


def test_seeds_have_requested_edges():
    rng = np.random.default_rng(1)
    for n, m in [(12, 40), (12, 66), (15, 20)]:
        assert sum(row.bit_count() for row in family_seed(n, m)) // 2 == m
        assert sum(row.bit_count() for row in random_rows(n, m, rng)) // 2 == m


def test_hill_climb_keeps_edge_count():
    rng = np.random.default_rng(2)
    rows = random_rows(12, 40, rng)
    best, best_rows, _ = hill_climb(rows, 500, rng)
    assert sum(row.bit_count() for row in best_rows) // 2 == 40
    assert best <= count_cliques(rows, 3)
    assert best == count_cliques(best_rows, 3)


def test_limits():
    with pytest.raises(OrderLimitError):
        local_min(513, 10)
    with pytest.raises(DomainError):
        local_min(5, 11)
    with pytest.raises(DomainError):
        local_min(5, 4, restarts=0)
