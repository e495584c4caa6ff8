# qfsplit/commands/parse/routes.py

from pathlib import Path
from typing import Optional
import logging
import time

import typer

from ...io.presentation import describe_field, parse_presentation, serialize_presentation
from ..common import console, emit, qfs_errors
from .schemas import ParseCheckReport

logger = logging.getLogger(__name__)

router = typer.Typer()


@router.command("parse-check")
def parse_check(
    presentation: Path = typer.Argument(..., help="Presentation file (YAML)"),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the JSON report here"),
    no_timing: bool = typer.Option(False, "--no-timing", help="Leave timings out of the report"),
):
    """Validate a presentation file and print its canonical form"""
    start = time.perf_counter()
    with qfs_errors():
        h = parse_presentation(presentation)
        canonical = serialize_presentation(h)
    ring = h.ring
    report = ParseCheckReport(
        config={"check_homogeneity": h.check_homogeneity},
        p=h.p,
        variables=dict(zip(ring.variables, ring.weights)),
        field=describe_field(h),
        f=h.f.to_text(),
        G=h.G.to_text(),
        degree_f=h.d_f,
        degree_G=h.d_G,
        canonical=canonical,
        elapsed=time.perf_counter() - start,
    )
    if not as_json:
        console.print(canonical, end="", markup=False, highlight=False)
        console.print(f"valid; deg f = {report.degree_f}")
    emit(report, as_json, output, no_timing)
