"""Render reports as JSON, CSV or rich text."""

import csv
import io
import logging
from pathlib import Path
from typing import Optional

from rich.console import Console
from rich.table import Table

from report.commands import OutputFormat
from report.schemas import Report

logger = logging.getLogger(__name__)


def to_json(report: Report) -> str:
    return report.model_dump_json(by_alias=True, indent=2) + "\n"


def to_csv(report: Report) -> str:
    buffer = io.StringIO()
    if report.rows:
        writer = csv.DictWriter(buffer, fieldnames=list(report.rows[0]), lineterminator="\n")
        writer.writeheader()
        writer.writerows(report.rows)
    return buffer.getvalue()


def render_text(report: Report, console: Optional[Console] = None):
    console = console or Console()
    status = "[bold green]PASS[/bold green]" if report.passed else "[bold red]FAIL[/bold red]"
    console.print(f"[bold cyan]trimin {report.command}[/bold cyan] {status}")

    if report.checks:
        table = Table(title="Checks")
        table.add_column("Check", style="cyan")
        table.add_column("Result")
        table.add_column("Value", justify="right")
        table.add_column("Tolerance", justify="right")
        for check in report.checks:
            table.add_row(
                check.name,
                "[green]pass[/green]" if check.passed else "[red]fail[/red]",
                "" if check.value is None else f"{check.value:.6g}",
                check.tolerance,
            )
        console.print(table)

    if report.rows:
        rows = Table(title="Rows")
        columns = list(report.rows[0])
        for column in columns:
            rows.add_column(column, justify="right")
        for row in report.rows:
            rows.add_row(*(f"{row[c]:.6g}" if isinstance(row[c], float) else str(row[c]) for c in columns))
        console.print(rows)

    for finding in report.findings:
        console.print(f"[yellow]finding:[/yellow] {finding}")


def write_report(report: Report, fmt: OutputFormat, output: Optional[str] = None):
    """Write ``report`` to ``output`` (stdout when None)."""
    if fmt is OutputFormat.TEXT:
        if output:
            with open(output, "w", encoding="utf-8") as handle:
                render_text(report, Console(file=handle, width=120, color_system=None))
        else:
            render_text(report)
        return
    text = to_json(report) if fmt is OutputFormat.JSON else to_csv(report)
    if output:
        Path(output).write_text(text, encoding="utf-8")
        logger.info(f"Report written to {output}")
    else:
        print(text, end="")
