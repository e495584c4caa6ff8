# qfsplit/commands/delta1/routes.py

from pathlib import Path
from typing import Optional
import logging
import time

import typer

from ...core.delta_fedder import delta1_power, delta1_shortcut
from ...io.presentation import parse_presentation
from ..common import console, emit, finish, qfs_errors
from .schemas import Delta1Report

logger = logging.getLogger(__name__)

router = typer.Typer()


@router.command("delta1")
def delta1(
    presentation: Path = typer.Argument(..., help="Presentation file (YAML)"),
    power: Optional[int] = typer.Option(None, "--power", "-k", help="Exponent k in Delta_1((f+pG)^k); default p-1"),
    modulus: Optional[int] = typer.Option(None, "--modulus", "-q", help="Reduce modulo m^[q]"),
    shortcut: bool = typer.Option(False, "--shortcut", help="Cross-check k = 1 against Delta_cl(f) + G^p"),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the JSON report here"),
    no_timing: bool = typer.Option(False, "--no-timing", help="Leave timings out of the report"),
):
    """Delta_1 of a power of the lift f + pG"""
    start = time.perf_counter()
    with qfs_errors():
        h = parse_presentation(presentation)
        k = power if power is not None else h.p - 1
        D = delta1_power(h, k, bound=modulus)
        agrees = None
        if shortcut:
            if k != 1:
                raise typer.BadParameter("--shortcut only applies to k = 1", param_hint="--shortcut")
            agrees = delta1_shortcut(h).truncate(modulus) == D
    report = Delta1Report(
        config={"power": k, "modulus": modulus, "shortcut": shortcut},
        p=h.p,
        f=h.f.to_text(),
        G=h.G.to_text(),
        power=k,
        modulus=modulus,
        delta=D.to_text(),
        terms=len(D),
        degree=D.weighted_degree_check().degree,
        shortcut_agrees=agrees,
        elapsed=time.perf_counter() - start,
    )
    if not as_json:
        where = f" mod m^[{modulus}]" if modulus else ""
        console.print(f"Delta_1((f + {h.p}G)^{k}){where} = {report.delta}")
        console.print(f"{report.terms} terms, weighted degree {report.degree}")
        if agrees is not None:
            console.print("shortcut agrees" if agrees else "[bold red]shortcut disagrees[/bold red]")
    emit(report, as_json, output, no_timing)
    finish(agrees is not False)
