"""Pydantic models for run configuration and verification reports."""

import logging
from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, validator

from core.config import DEFAULT_SEED, DEFAULT_THREADS
from report.commands import COMMAND_DEFAULTS, Command, OutputFormat, default_format, default_parameters

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1
EXACT = "exact"


class RunConfig(BaseModel):
    """One CLI invocation"""
    command: Command
    parameters: Dict[str, Any] = Field(default_factory=dict)
    output: Optional[str] = Field(None, description="Output path; stdout when omitted")
    format: Optional[OutputFormat] = None
    seed: int = DEFAULT_SEED
    threads: int = DEFAULT_THREADS

    @validator('threads')
    def validate_threads(cls, v):
        if v < 1:
            raise ValueError("threads must be at least 1")
        return v

    @validator('parameters', always=True)
    def fill_parameters(cls, v, values):
        command = values.get('command')
        if command is None:
            return v
        merged = default_parameters(command)
        unknown = set(v) - set(merged)
        if unknown:
            raise ValueError(f"Unknown parameters for {command.value}: {sorted(unknown)}")
        merged.update({k: val for k, val in v.items() if val is not None})
        return merged

    @validator('format', always=True)
    def validate_format(cls, v, values):
        command = values.get('command')
        if command is None:
            return v
        if v is None:
            return default_format(command)
        if v not in COMMAND_DEFAULTS[command]["formats"]:
            raise ValueError(f"Format {v.value} is not available for {command.value}")
        return v


class Check(BaseModel):
    """Outcome of one verification; ``tolerance`` is "exact" for rational checks"""
    name: str
    passed: bool
    tolerance: str = EXACT
    value: Optional[float] = None
    detail: str = ""


class Report(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    schema_version: int = Field(SCHEMA_VERSION, alias="schema")
    command: str
    parameters: Dict[str, Any] = Field(default_factory=dict)
    passed: bool = True
    checks: List[Check] = Field(default_factory=list)
    findings: List[str] = Field(default_factory=list)
    rows: List[Dict[str, Any]] = Field(default_factory=list)
    data: Dict[str, Any] = Field(default_factory=dict)

    def add(self, name: str, passed: bool, tolerance: Optional[float] = None, value: Optional[float] = None,
            detail: str = "") -> Check:
        check = Check(
            name=name,
            passed=bool(passed),
            tolerance=EXACT if tolerance is None else f"{tolerance:g}",
            value=None if value is None else float(value),
            detail=detail,
        )
        self.checks.append(check)
        if not check.passed:
            self.passed = False
            logger.warning(f"Check {name} failed: value={value} tolerance={check.tolerance} {detail}")
        return check

    def merge(self, other: "Report", prefix: str):
        for check in other.checks:
            self.checks.append(check.model_copy(update={"name": f"{prefix}.{check.name}"}))
        self.findings.extend(f"{prefix}: {finding}" for finding in other.findings)
        self.data[prefix] = other.data
        self.passed = self.passed and other.passed
