"""Command vocabulary and per-command defaults for trimin runs."""

from enum import Enum
from typing import Any, Dict

from core.config import BRUTE_MAX_N


class Command(Enum):
    IDENTITIES = "identities"
    HCURVE = "hcurve"
    BRUTE = "brute"
    CONSTRUCT = "construct"
    JOIN = "join"
    RATIOS = "ratios"
    GROW = "grow"
    STABILITY = "stability"
    RESOLVE_FE = "resolve-fe"
    REPORT_ALL = "report-all"


class OutputFormat(Enum):
    JSON = "json"
    CSV = "csv"
    TEXT = "text"


COMMAND_DEFAULTS: Dict[Command, Dict[str, Any]] = {
    Command.IDENTITIES: {
        "description": "Exact flag-algebra identity suite",
        "formats": [OutputFormat.JSON, OutputFormat.TEXT],
        "parameters": {"max_level": 5},
    },
    Command.HCURVE: {
        "description": "Extremal curve table over an edge-density grid",
        "formats": [OutputFormat.CSV, OutputFormat.JSON, OutputFormat.TEXT],
        "parameters": {"start": 0.5, "stop": 0.9, "steps": 100},
    },
    Command.BRUTE: {
        "description": "Exact minimum clique counts for every edge count",
        "formats": [OutputFormat.CSV, OutputFormat.JSON, OutputFormat.TEXT],
        "parameters": {"n": 6, "r": 3},
    },
    Command.CONSTRUCT: {
        "description": "Edge and clique statistics of extremal family members",
        "formats": [OutputFormat.CSV, OutputFormat.JSON, OutputFormat.TEXT],
        "parameters": {"a": 0.7, "ns": [100, 200, 400, 800], "max_clique": 5},
    },
    Command.JOIN: {
        "description": "Density vector of the extremal join limit",
        "formats": [OutputFormat.JSON, OutputFormat.TEXT],
        "parameters": {"a": 0.7, "level": 5, "n": 400},
    },
    Command.RATIOS: {
        "description": "Numerical minimization of the part-ratio polynomial",
        "formats": [OutputFormat.JSON, OutputFormat.TEXT],
        "parameters": {"a": 0.7, "starts": 8, "eps": 0.01},
    },
    Command.GROW: {
        "description": "Grow triangle-free graphs from a graph6 file to a target edge count",
        "formats": [OutputFormat.JSON, OutputFormat.TEXT],
        "parameters": {"input": None, "s": None},
    },
    Command.STABILITY: {
        "description": "Near-extremal graphs and their distance to the Turán graph",
        "formats": [OutputFormat.JSON, OutputFormat.TEXT],
        "parameters": {"n": 6, "t": 3, "delta": 0.0, "m": None},
    },
    Command.RESOLVE_FE: {
        "description": "Edge-flag triples satisfying the f^E expansion, with slack reports",
        "formats": [OutputFormat.JSON, OutputFormat.TEXT],
        "parameters": {},
    },
    Command.REPORT_ALL: {
        "description": "Every check in one JSON summary",
        "formats": [OutputFormat.JSON, OutputFormat.TEXT],
        "parameters": {"brute_max_n": BRUTE_MAX_N, "local_n": 60, "local_iters": 20000, "ratio_points": 50,
                       "growth_cases": 100},
    },
}


def default_parameters(command: Command) -> Dict[str, Any]:
    return dict(COMMAND_DEFAULTS[command]["parameters"])


def default_format(command: Command) -> OutputFormat:
    return COMMAND_DEFAULTS[command]["formats"][0]
