import io
import json

import pytest
from pydantic import ValidationError
from rich.console import Console

from report.commands import Command, OutputFormat, default_parameters
from report.schemas import SCHEMA_VERSION, Report, RunConfig
from report.writers import render_text, to_csv, to_json

pytestmark = pytest.mark.unit


def test_defaults_are_filled():
    config = RunConfig(command=Command.BRUTE)
    assert config.parameters == default_parameters(Command.BRUTE)
    assert config.format is OutputFormat.CSV
    assert config.threads >= 1


def test_overrides_keep_other_defaults():
    config = RunConfig(command=Command.BRUTE, parameters={"n": 5})
    assert config.parameters == {"n": 5, "r": 3}


@pytest.mark.parametrize("kwargs", [
    {"command": Command.BRUTE, "parameters": {"bogus": 1}},
    {"command": Command.BRUTE, "threads": 0},
    {"command": Command.IDENTITIES, "format": OutputFormat.CSV},
])
def test_invalid_configs(kwargs):
    with pytest.raises(ValidationError):
        RunConfig(**kwargs)


def test_failed_check_fails_report():
    report = Report(command="brute")
    report.add("exact_one", True)
    assert report.passed
    check = report.add("numeric_one", False, tolerance=1e-6, value=0.5)
    assert not report.passed
    assert report.checks[0].tolerance == "exact"
    assert check.tolerance == "1e-06"


def test_merge_prefixes_checks():
    outer, inner = Report(command="report-all"), Report(command="brute")
    inner.add("mantel", True)
    inner.findings.append("note")
    inner.data["rows"] = 3
    outer.merge(inner, "brute.n5")
    assert outer.checks[0].name == "brute.n5.mantel"
    assert outer.findings == ["brute.n5: note"]
    assert outer.data == {"brute.n5": {"rows": 3}}
    assert outer.passed


def test_json_carries_schema_version():
    report = Report(command="hcurve")
    report.add("c_range", True)
    payload = json.loads(to_json(report))
    assert payload["schema"] == SCHEMA_VERSION == 1
    assert payload["checks"][0]["name"] == "c_range"


def test_csv_and_text_rendering():
    report = Report(command="brute", rows=[{"n": 4, "m": 0, "min_count": 0}])
    assert to_csv(report).splitlines() == ["n,m,min_count", "4,0,0"]
    assert to_csv(Report(command="brute")) == ""
    buffer = io.StringIO()
    render_text(report, Console(file=buffer, width=120, color_system=None))
    assert "PASS" in buffer.getvalue()
