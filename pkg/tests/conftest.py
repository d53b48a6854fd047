import os
import sys

import numpy as np
import pytest

# Add the project root to the Python path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from core.graph import complete_graph, cycle_graph, empty_graph, from_edges, path_graph, turan_graph


@pytest.fixture
def rng():
    """Seeded generator so randomized tests are repeatable."""
    return np.random.default_rng(12345)


@pytest.fixture
def small_graphs():
    """A handful of named graphs used across modules."""
    return {
        "K4": complete_graph(4),
        "C5": cycle_graph(5),
        "P4": path_graph(4),
        "E3": empty_graph(3),
        "paw": from_edges(4, [(0, 1), (0, 2), (1, 2), (2, 3)]),
        "T3_6": turan_graph(3, 6),
    }


@pytest.fixture
def tmp_output(tmp_path):
    """Output path inside pytest's temporary directory."""
    return str(tmp_path / "report.json")
