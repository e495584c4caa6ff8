# qfsplit/commands/enumerate/routes.py

from pathlib import Path
from typing import List, Optional
import logging

import typer

from ...catalog.enumeration import counterexample_text, enumerate_claim, job_for
from ...catalog.instances import get_instance
from ...models.models import EnumerationMode
from ..common import console, emit, finish, parse_assignments, qfs_errors
from .schemas import CounterexampleReport, EnumerationReport

logger = logging.getLogger(__name__)

router = typer.Typer()

# counterexamples echoed to the terminal; the report keeps all of them
SHOWN = 10


@router.command("enumerate")
def enumerate_command(
    instance: str = typer.Option(..., "--instance", help="Catalog instance id"),
    mode: Optional[EnumerationMode] = typer.Option(None, "--mode", help="exhaustive or random"),
    samples: Optional[int] = typer.Option(None, "--samples", help="Random samples"),
    seed: Optional[int] = typer.Option(None, "--seed", help="Seed; required in random mode"),
    workers: Optional[int] = typer.Option(None, "--workers", help="Worker processes"),
    batch_size: Optional[int] = typer.Option(None, "--batch-size", help="Candidates per batch"),
    bound: Optional[int] = typer.Option(None, "--bound", help="Claimed height bound"),
    field_degree: Optional[int] = typer.Option(None, "--field-degree", help="Coefficients in GF(p^e)"),
    params: Optional[List[str]] = typer.Option(None, "--param", help="Parameter value name=expr; repeatable"),
    param_samples: Optional[int] = typer.Option(
        None, "--param-samples", min=1, help="Parameter assignments to sample when no --param is given"
    ),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the JSON report here"),
    no_timing: bool = typer.Option(False, "--no-timing", help="Leave timings out of the report"),
):
    """Check a claim about every perturbation G of a catalog instance"""
    assignment = parse_assignments(params)
    with qfs_errors():
        spec = get_instance(instance)
        job = job_for(
            spec, mode=mode, samples=samples, seed=seed, workers=workers,
            batch_size=batch_size, bound=bound, field_degree=field_degree, assignment=assignment or None,
            parameter_samples=param_samples,
        )
        if job.mode == EnumerationMode.RANDOM and seed is None:
            raise typer.BadParameter("random mode needs an explicit seed", param_hint="--seed")
        results = enumerate_claim(job)
    claim = "certified infinite" if job.bound is None else f"height <= {job.bound}"
    ring = spec.ring(spec.field(job.field_degree), parameters=[])
    first = results[0]
    report = EnumerationReport(
        config={"mode": job.mode.value, "samples": job.samples, "seed": job.seed, "workers": job.workers,
                "batch_size": job.batch_size, "bound": job.bound, "field_degree": job.field_degree,
                "parameter_samples": job.parameter_samples},
        instance=job.instance,
        mode=job.mode,
        claim=claim,
        field=first.field_label,
        assignments=[r.assignment for r in results],
        monomials=[ring.monomial_text(m) for m in first.monomials],
        space_size=first.space_size,
        checked=sum(r.checked for r in results),
        confirmed=all(r.confirmed for r in results),
        counterexamples=[
            CounterexampleReport(assignment=r.assignment, coefficients=list(c), G=counterexample_text(r, c))
            for r in results
            for c in r.counterexamples
        ],
        elapsed=sum(r.elapsed for r in results),
    )
    if not as_json:
        for r in results:
            where = f" at {r.assignment}" if r.assignment else ""
            console.print(f"{job.instance}{where} over {r.field_label}: {r.checked} of {r.space_size} G checked")
        if report.confirmed:
            console.print(f"[bold green]confirmed[/bold green]: {claim} for every G checked")
        else:
            console.print(f"[bold red]{len(report.counterexamples)} counterexample(s)[/bold red] to {claim}")
            for c in report.counterexamples[:SHOWN]:
                where = f" at {c.assignment}" if c.assignment else ""
                console.print(f"  G = {c.G}{where}")
    emit(report, as_json, output, no_timing)
    finish(report.confirmed)
