# qfsplit/commands/witt/routes.py

from pathlib import Path
from typing import List, Optional
import logging
import time

import typer
from rich.table import Table

from ...core.witt import KINDS, derive_table
from ...io.reports import write_atomic
from ..common import console, emit, qfs_errors
from .schemas import GradingReport, WittTableReport

logger = logging.getLogger(__name__)

router = typer.Typer()


@router.command("witt-table")
def witt_table(
    p: int = typer.Option(..., "--p", help="Prime"),
    n: int = typer.Option(..., "--n", help="Witt vector length"),
    kinds: Optional[List[str]] = typer.Option(None, "--kind", help="S, P, N or F; repeatable"),
    export: Optional[Path] = typer.Option(None, "--export", help="Write the polynomials as text here"),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the JSON report here"),
    no_timing: bool = typer.Option(False, "--no-timing", help="Leave timings out of the report"),
):
    """Universal addition, multiplication, negation and Frobenius polynomials of W_n"""
    start = time.perf_counter()
    selected = [k.upper() for k in kinds] if kinds else list(KINDS)
    unknown = [k for k in selected if k not in KINDS]
    if unknown:
        raise typer.BadParameter(f"unknown kind(s) {', '.join(unknown)}", param_hint="--kind")
    with qfs_errors():
        table = derive_table(p, n)
        polynomials = {k: [h.to_text() for h in table.polynomials(k)] for k in selected}
        grading = [GradingReport.model_validate(e) for e in table.grading_report(selected)]
    if export is not None:
        write_atomic(export, table.export_text(selected))
    report = WittTableReport(
        config={"p": p, "n": n, "kinds": selected},
        p=p,
        n=n,
        polynomials=polynomials,
        grading=grading,
        elapsed=time.perf_counter() - start,
    )
    if not as_json:
        for kind in selected:
            for i, text in enumerate(polynomials[kind]):
                console.print(f"{kind}{i} = {text}")
        summary = Table(title=f"grading, deg X_i = deg Y_i = {p}^i")
        for col in ("poly", "homogeneous", "degree", "terms"):
            summary.add_column(col)
        for g in grading:
            summary.add_row(f"{g.kind}{g.index}", "yes" if g.homogeneous else "no", str(g.degree), str(g.terms))
        console.print(summary)
    emit(report, as_json, output, no_timing)
