import networkx as nx
import pytest
from hypothesis import given, settings

from core.canonical import canonical
from core.errors import Graph6FormatError
from core.graph import complete_graph, cycle_graph, empty_graph
from core.graph6 import emit_graph6, encode_graph6, parse_graph6, read_graph6_file, write_graph6_file
from core.graph import from_networkx
from tests.utils.fixtures import graphs, nx_graph6

pytestmark = pytest.mark.unit


def test_known_encodings():
    assert encode_graph6(complete_graph(3)) == "Bw"
    assert encode_graph6(empty_graph(1)) == "@"
    assert parse_graph6(">>graph6<<Bw") == complete_graph(3)


@settings(max_examples=60, deadline=None)
@given(graphs(max_order=10))
def test_encoding_matches_networkx(g):
    assert encode_graph6(g, canonicalize=False) == nx_graph6(g)
    assert parse_graph6(nx_graph6(g)) == g


def test_large_order_uses_long_header():
    g = cycle_graph(70)
    text = encode_graph6(g, canonicalize=False)
    assert text[0] == "~"
    assert parse_graph6(text) == g
    assert from_networkx(nx.from_graph6_bytes(text.encode("ascii"))) == g


def test_emit_is_canonical():
    g = cycle_graph(5).permuted([2, 0, 4, 1, 3])
    assert parse_graph6(emit_graph6(g)) == canonical(g)


@pytest.mark.parametrize("text, offset", [
    ("B", 1),
    ("Bww", 2),
    ("B!", 1),
    ("Bx", 1),
    ("", 0),
])
def test_malformed_input_reports_offset(text, offset):
    with pytest.raises(Graph6FormatError) as info:
        parse_graph6(text)
    assert info.value.offset == offset
    assert info.value.exit_code == 2


def test_file_round_trip(tmp_path):
    path = tmp_path / "corpus.g6"
    written = write_graph6_file(path, [complete_graph(3), cycle_graph(5)], canonicalize=False)
    assert written == 2
    assert read_graph6_file(path) == [complete_graph(3), cycle_graph(5)]


def test_file_errors_carry_line_numbers(tmp_path):
    path = tmp_path / "bad.g6"
    path.write_text("Bw\n\nB!\n", encoding="ascii")
    with pytest.raises(Graph6FormatError) as info:
        read_graph6_file(path)
    assert info.value.line == 3
    assert "line 3" in info.value.detail
