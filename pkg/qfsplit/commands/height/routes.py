# qfsplit/commands/height/routes.py

from pathlib import Path
from typing import Optional
import logging

import typer
from rich.table import Table

from ...config.settings import settings
from ...core.delta_fedder import qfs_height
from ...io.presentation import describe_field, parse_presentation
from ..common import console, emit, qfs_errors
from .schemas import HeightReport, VerdictReport

logger = logging.getLogger(__name__)

router = typer.Typer()


def verdict_table(title: str, result: VerdictReport) -> Table:
    table = Table(title=title)
    table.add_column("level", justify="right")
    table.add_column("T in m^[q]", justify="center")
    table.add_column("q", justify="right")
    table.add_column("terms", justify="right")
    table.add_column("witness")
    for level in result.levels:
        mark = "yes" if level.member else "[bold]no[/bold]"
        if not level.exercised:
            mark += " *"
        table.add_row(str(level.level), mark, str(level.q), str(level.terms), level.witness or "")
    return table


@router.command("height")
def height(
    presentation: Path = typer.Argument(..., help="Presentation file (YAML)"),
    max_level: Optional[int] = typer.Option(None, "--max-level", help="Highest level to test"),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the JSON report here"),
    no_timing: bool = typer.Option(False, "--no-timing", help="Leave timings out of the report"),
):
    """Quasi-F-split height of W(k)[x]/(f + pG)"""
    with qfs_errors():
        h = parse_presentation(presentation)
        verdict = qfs_height(h, max_level)
    ring = h.ring
    report = HeightReport(
        config={"max_level": max_level if max_level is not None else settings.MAX_LEVEL,
                "exponent_bound": settings.EXPONENT_BOUND},
        p=h.p,
        variables=dict(zip(ring.variables, ring.weights)),
        field=describe_field(h),
        f=h.f.to_text(),
        G=h.G.to_text(),
        result=VerdictReport.from_verdict(ring, verdict),
        elapsed=verdict.elapsed,
    )
    if not as_json:
        console.print(verdict_table(f"f = {report.f}, G = {report.G}", report.result))
        if report.result.certificate is not None:
            console.print(f"certificate: {report.result.certificate.reason}")
        console.print(f"[bold]height: {report.result.summary}[/bold]")
    emit(report, as_json, output, no_timing)
