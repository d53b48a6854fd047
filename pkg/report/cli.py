#!/usr/bin/env python
"""
Command-line entry point for trimin.

Every subcommand writes a report to stdout or --output. Exit codes:
0 when every check passes, 1 when a verification check fails, 2 on usage
or precondition errors.
"""

import argparse
import json
import logging
import sys
from typing import Any, Dict, List, Optional

from pydantic import ValidationError

from core.config import DEFAULT_SEED, DEFAULT_THREADS, LOG_LEVEL
from core.errors import EXIT_USAGE, handle_error
from report.commands import COMMAND_DEFAULTS, Command, OutputFormat
from report.runner import run
from report.schemas import RunConfig

logger = logging.getLogger("trimin")

# CLI spelling of parameters whose flag differs from the parameter name
FLAG_NAMES = {"start": "--from", "stop": "--to"}

# Parameters whose default is None still need a type
PARAMETER_TYPES = {"input": str, "s": int, "m": int}


def _add_parameter(parser: argparse.ArgumentParser, name: str, default: Any):
    flag = FLAG_NAMES.get(name, "--" + name.replace("_", "-"))
    if isinstance(default, list):
        parser.add_argument(flag, dest=name, type=type(default[0]), nargs="+", default=None,
                            help=f"default: {' '.join(str(v) for v in default)}")
        return
    kind = PARAMETER_TYPES.get(name, type(default))
    parser.add_argument(flag, dest=name, type=kind, default=None, help=f"default: {default}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="trimin", description="Triangle-minimization verification toolkit")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command, spec in COMMAND_DEFAULTS.items():
        sub = subparsers.add_parser(command.value, help=spec["description"], description=spec["description"])
        sub.add_argument("-o", "--output", help="Output file (default: stdout)")
        sub.add_argument("--format", choices=[f.value for f in spec["formats"]],
                         help=f"Output format (default: {spec['formats'][0].value})")
        sub.add_argument("--seed", type=int, default=DEFAULT_SEED, help=f"Random seed (default: {DEFAULT_SEED})")
        sub.add_argument("--threads", type=int, default=DEFAULT_THREADS,
                         help=f"Worker processes (default: {DEFAULT_THREADS}, env TRIMIN_THREADS)")
        sub.add_argument("--verbose", "-v", action="store_true", help="Enable debug logging")
        for name, default in spec["parameters"].items():
            _add_parameter(sub, name, default)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    command = Command(args.command)
    parameters: Dict[str, Any] = {
        name: getattr(args, name) for name in COMMAND_DEFAULTS[command]["parameters"]
        if getattr(args, name) is not None
    }
    return RunConfig(
        command=command,
        parameters=parameters,
        output=args.output,
        format=OutputFormat(args.format) if args.format else None,
        seed=args.seed,
        threads=args.threads,
    )


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else 0

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else getattr(logging, LOG_LEVEL, logging.INFO),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr,
    )

    try:
        config = config_from_args(args)
    except ValidationError as exc:
        logger.error(f"Invalid arguments: {exc}")
        return EXIT_USAGE

    logger.info(
        f"Running {config.command.value}",
        extra={'context': json.dumps({'parameters': config.parameters, 'seed': config.seed,
                                      'threads': config.threads})}
    )
    try:
        return run(config)
    except Exception as exc:
        return handle_error(exc)


if __name__ == "__main__":
    sys.exit(main())
