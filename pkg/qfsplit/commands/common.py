# qfsplit/commands/common.py
from contextlib import contextmanager
from pathlib import Path
from typing import Dict, List, Optional
import enum
import logging

import typer
from pydantic import BaseModel
from rich.console import Console

from ..core.exceptions import QfsError
from ..io.reports import render_json, write_report

logger = logging.getLogger(__name__)

console = Console()
err_console = Console(stderr=True)


class ExitCode(int, enum.Enum):
    OK = 0
    MISMATCH = 1
    USAGE = 2


@contextmanager
def qfs_errors():
    """Report a QfsError raised by user input and exit with the usage code"""
    try:
        yield
    except QfsError as e:
        err_console.print(f"[bold red]error:[/bold red] {e.detail}")
        raise typer.Exit(code=ExitCode.USAGE)


def parse_assignments(items: Optional[List[str]]) -> Dict[str, str]:
    """``name=value`` pairs from repeated --param options"""
    out = {}
    for item in items or []:
        name, sep, value = item.partition("=")
        if not sep or not name.strip() or not value.strip():
            raise typer.BadParameter(f"expected name=value, got '{item}'", param_hint="--param")
        out[name.strip()] = value.strip()
    return out


def emit(report: BaseModel, as_json: bool, output: Optional[Path], no_timing: bool):
    """JSON to stdout when asked for, and to ``output`` whenever it is given"""
    timing = not no_timing
    if output is not None:
        write_report(output, report, timing)
    if as_json:
        typer.echo(render_json(report, timing), nl=False)


def finish(ok: bool):
    if not ok:
        raise typer.Exit(code=ExitCode.MISMATCH)
