import csv
import json
from pathlib import Path

import pytest

from core.graph import cycle_graph, empty_graph
from core.graph6 import read_graph6_file, write_graph6_file
from report.cli import main

pytestmark = pytest.mark.integration


def _csv_rows(path):
    with open(path, newline="", encoding="utf-8") as handle:
        return list(csv.DictReader(handle))


def test_brute_csv(tmp_path):
    out = tmp_path / "brute.csv"
    assert main(["brute", "--n", "6", "-o", str(out)]) == 0
    rows = _csv_rows(out)
    assert len(rows) == 16
    by_m = {int(row["m"]): int(row["min_count"]) for row in rows}
    assert by_m[9] == 0
    assert by_m[10] == 3
    assert by_m[15] == 20
    witnesses = read_graph6_file(Path(f"{out}.g6"))
    assert witnesses
    assert all(g.order == 6 for g in witnesses)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_brute_json_checks(tmp_path, n):
    out = tmp_path / "brute.json"
    assert main(["brute", "--n", str(n), "--format", "json", "-o", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["schema"] == 1
    checks = {c["name"]: c["passed"] for c in payload["checks"]}
    assert checks == {"monotone": True, "goodman_sweep": True, "mantel": True, "rademacher": True}


def test_hcurve_table(tmp_path):
    out = tmp_path / "curve.csv"
    assert main(["hcurve", "-o", str(out)]) == 0
    rows = _csv_rows(out)
    assert len(rows) == 100
    assert float(rows[0]["a"]) == pytest.approx(0.5)
    assert float(rows[-1]["a"]) == pytest.approx(0.9)


def test_hcurve_custom_grid(tmp_path):
    out = tmp_path / "curve.json"
    assert main(["hcurve", "--from", "0.6", "--to", "0.8", "--steps", "5", "--format", "json", "-o", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert len(payload["rows"]) == 5
    assert payload["passed"]


def test_stability_report(tmp_path):
    out = tmp_path / "stability.json"
    assert main(["stability", "-o", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["data"]["collected"] == 1
    assert payload["rows"][0]["distance"] == 0


def test_grow_from_file(tmp_path):
    source = tmp_path / "input.g6"
    write_graph6_file(source, [cycle_graph(5), empty_graph(8)], canonicalize=False)
    out = tmp_path / "grow.json"
    assert main(["grow", "--input", str(source), "-o", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert [row["target"] for row in payload["rows"]] == [6, 16]
    assert payload["rows"][0]["edits"] == 3
    grown = read_graph6_file(Path(f"{out}.g6"))
    assert [g.edge_count for g in grown] == [6, 16]


@pytest.mark.parametrize("argv", [
    [],
    ["bogus"],
    ["brute", "--format", "xml"],
    ["brute", "--n", "12"],
    ["brute", "--threads", "0"],
    ["grow"],
    ["hcurve", "--from", "1.5"],
])
def test_usage_errors_exit_two(argv, tmp_path):
    assert main(argv + ["-o", str(tmp_path / "out")] if argv else argv) == 2


def test_missing_input_file_exits_two(tmp_path):
    assert main(["grow", "--input", str(tmp_path / "missing.g6")]) == 2


@pytest.mark.slow
def test_brute_eight(tmp_path):
    out = tmp_path / "brute8.csv"
    assert main(["brute", "--n", "8", "-o", str(out)]) == 0
    by_m = {int(row["m"]): int(row["min_count"]) for row in _csv_rows(out)}
    assert by_m[16] == 0
    assert by_m[17] == 4
    assert by_m[28] == 56
