import json

import pytest

from report.commands import Command
from report.runner import execute, run
from report.schemas import RunConfig

pytestmark = pytest.mark.integration


def test_identity_suite_passes():
    report = execute(RunConfig(command=Command.IDENTITIES))
    assert report.passed, [c.name for c in report.checks if not c.passed]
    names = {c.name for c in report.checks}
    assert "five_vertex_cases" in names
    assert "resolve_fE_nonempty" in names
    assert report.data["differences"] == {}
    assert report.data["triples"]


def test_resolve_fe_reports_triples(tmp_output):
    config = RunConfig(command=Command.RESOLVE_FE, output=tmp_output)
    assert run(config) == 0
    with open(tmp_output, encoding="utf-8") as handle:
        payload = json.load(handle)
    assert payload["schema"] == 1
    for triple in payload["data"]["triples"]:
        assert set(triple) >= {"central", "boundary", "other", "p4_shaped", "f_e", "slack_dominated"}


def test_construct_statistics():
    report = execute(RunConfig(command=Command.CONSTRUCT, parameters={"a": 0.7, "ns": [100, 200]}))
    assert report.passed
    assert [row["n"] for row in report.rows] == [100, 200]


def test_join_checks_at_seven_tenths():
    report = execute(RunConfig(command=Command.JOIN, parameters={"a": 0.7, "level": 5}))
    assert report.passed, [c.name for c in report.checks if not c.passed]
    names = {c.name for c in report.checks}
    assert {"edge_density", "clique_density[3]", "clique_density[4]", "clique_recursion[3]"} <= names
    assert {"construction_gap[100]", "construction_gap[200]", "construction_gap[400]",
            "construction_extrapolation"} <= names


def test_ratios_match_curve():
    report = execute(RunConfig(command=Command.RATIOS, parameters={"a": 0.7}))
    assert report.passed, [c.name for c in report.checks if not c.passed]


@pytest.mark.slow
def test_report_all_is_reproducible(tmp_path):
    parameters = {"brute_max_n": 6, "local_n": 30, "local_iters": 2000, "ratio_points": 5, "growth_cases": 10}
    outputs = []
    for name in ("first.json", "second.json"):
        path = tmp_path / name
        run(RunConfig(command=Command.REPORT_ALL, parameters=parameters, output=str(path), seed=9))
        outputs.append(path.read_text())
    assert outputs[0] == outputs[1]
    payload = json.loads(outputs[0])
    assert payload["command"] == "report-all"
    assert any(c["name"].startswith("brute[6].") for c in payload["checks"])
