"""Console, logging bootstrap and the shared output helpers of the CLI."""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping, Sequence
from contextlib import contextmanager
from pathlib import Path
from typing import Any

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.table import Table

from ..audit.render import rational, write_report
from ..audit.serialize import write_json
from ..errors import IvoaError
from ..validation import Severity, ValidationResult

console = Console(emoji=True)
err_console = Console(emoji=True, stderr=True)
logger = logging.getLogger(__name__)


def setup_logging(level: str) -> None:
    logging.basicConfig(
        level=level,
        format="%(message)s",
        datefmt="[%X]",
        handlers=[RichHandler(console=err_console, rich_tracebacks=True, show_path=False)],
        force=True,
    )


@contextmanager
def handled() -> Iterator[None]:
    """Turn library errors into a status line and the matching exit code."""
    try:
        yield
    except IvoaError as e:
        icon = ":warning:" if e.exit_code == 1 else ":x:"
        err_console.print(f"{icon} [red]{type(e).__name__}[/red]: {e}")
        raise typer.Exit(e.exit_code) from e


def cell(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    try:
        return rational(value)
    except (TypeError, ValueError):
        return str(value)


def show_table(title: str, columns: Sequence[str], rows: Sequence[Sequence[Any]]) -> None:
    table = Table(title=title)
    for name in columns:
        table.add_column(name)
    for row in rows:
        table.add_row(*(cell(v) for v in row))
    console.print(table)


def save(
    command: str,
    inputs: Mapping[str, Any],
    per_degree: Sequence[Any],
    *,
    json_path: Path | None,
    report: Any = None,
    report_path: Path | None = None,
    template: str = "audit.md.j2",
) -> None:
    if json_path is not None:
        write_json(json_path, command, inputs, per_degree)
        console.print(f":floppy_disk: [green]Wrote[/green] {json_path}")
    if report_path is not None and report is not None:
        write_report(report_path, report, template)
        console.print(f":page_facing_up: [green]Wrote[/green] {report_path}")


def finish(result: ValidationResult) -> None:
    """Print check outcomes; exit with 2 when any check failed."""
    for issue in result.issues:
        match issue.severity:
            case Severity.OK:
                console.print(f":white_check_mark: [green]{issue.check_key}[/green]")
            case Severity.WARNING:
                console.print(f":warning: [yellow]{issue.check_key}[/yellow]: {issue.message}")
            case Severity.ERROR:
                console.print(f":x: [red]{issue.check_key}[/red]: {issue.message}")
    if result.warnings:
        logger.info("%d advisory warning(s)", len(result.warnings))
    if result.has_errors:
        raise typer.Exit(2)
