# qfsplit/commands/verify/routes.py

from pathlib import Path
from typing import List, Optional
import logging
import time

import typer
from rich.table import Table

from ...catalog.enumeration import enumerate_claim, job_for
from ...catalog.identities import proof_identity_check
from ...catalog.instances import get_instance, load_catalog
from ...catalog.runner import run_instance
from ...models.models import CaseReport
from ..common import console, emit, finish, qfs_errors
from ..height.schemas import VerdictReport
from .schemas import CaseResult, ClaimResult, IdentityResult, InstanceResult, VerifyReport

logger = logging.getLogger(__name__)

router = typer.Typer()


def _case_result(report: CaseReport, ring) -> CaseResult:
    return CaseResult(
        case=report.case,
        field=report.field_label,
        assignment=report.assignment,
        expected=report.expected.describe(),
        computed=VerdictReport.from_verdict(ring, report.verdict),
        survey={ring.monomial_text(m): value for m, value in report.survey},
        passed=report.passed,
    )


def verify_instance(instance_id: str, samples: int, seed: int, identities: bool, universal: bool) -> InstanceResult:
    spec = get_instance(instance_id)
    ring = spec.ring(spec.field(1), parameters=[])
    cases = [_case_result(r, ring) for r in run_instance(instance_id, samples=samples, seed=seed)]
    checks = []
    if identities:
        for c in proof_identity_check(instance_id):
            checks.append(IdentityResult(
                name=c.name,
                kind=c.kind,
                target=ring.monomial_text(c.target) if c.target is not None else None,
                expected=c.expected,
                computed=c.computed,
                note=c.note,
                passed=c.passed,
            ))
    claim = None
    if universal and spec.universal is not None:
        runs = enumerate_claim(job_for(spec, seed=seed))
        claim = ClaimResult(
            claim=spec.universal.to_expectation().describe(),
            mode=runs[0].job.mode,
            field=runs[0].field_label,
            assignments=[r.assignment for r in runs],
            checked=sum(r.checked for r in runs),
            space_size=runs[0].space_size,
            counterexamples=sum(len(r.counterexamples) for r in runs),
            passed=all(r.confirmed for r in runs),
        )
    passed = all(c.passed for c in cases) and all(c.passed for c in checks) and (claim is None or claim.passed)
    return InstanceResult(
        instance=instance_id,
        description=spec.description,
        cases=cases,
        identities=checks,
        universal=claim,
        passed=passed,
    )


def catalog_table(results: List[InstanceResult]) -> Table:
    table = Table(title="catalog")
    for col in ("instance", "check", "field", "expected", "computed", "ok"):
        table.add_column(col)
    for r in results:
        for c in r.cases:
            where = f" {c.assignment}" if c.assignment else ""
            table.add_row(r.instance, c.case, c.field + where, c.expected, c.computed.summary, _mark(c.passed))
        for c in r.identities:
            table.add_row(r.instance, c.name, "", c.kind.value, "holds" if c.passed else "fails", _mark(c.passed))
        if r.universal is not None:
            u = r.universal
            table.add_row(
                r.instance, f"every G ({u.mode.value}, {u.checked})", u.field, u.claim,
                f"{u.counterexamples} counterexamples", _mark(u.passed),
            )
    return table


def _mark(ok: bool) -> str:
    return "[green]ok[/green]" if ok else "[bold red]FAIL[/bold red]"


@router.command("verify-paper")
def verify_catalog(
    ctx: typer.Context,
    instances: Optional[List[str]] = typer.Option(None, "--instance", help="Catalog instance id; repeatable"),
    all_instances: bool = typer.Option(False, "--all", help="Every catalog instance"),
    seed: int = typer.Option(0, "--seed", help="Seed for parameter and G sampling"),
    samples: int = typer.Option(10, "--samples", help="Parameter assignments per field"),
    identities: bool = typer.Option(True, "--identities/--no-identities", help="Check the coefficient identities"),
    universal: bool = typer.Option(False, "--universal", help="Also enumerate G for the claims about every G"),
    as_json: bool = typer.Option(False, "--json", help="Print the JSON report"),
    output: Optional[Path] = typer.Option(None, "--output", "-o", help="Write the JSON report here"),
    no_timing: bool = typer.Option(False, "--no-timing", help="Leave timings out of the report"),
):
    """Recompute the catalog heights and coefficient identities"""
    start = time.perf_counter()
    if all_instances == bool(instances):
        raise typer.BadParameter("give either --all or at least one --instance", param_hint="--instance")
    with qfs_errors():
        ids = list(load_catalog()) if all_instances else list(instances)
        results = [verify_instance(i, samples, seed, identities, universal) for i in ids]
    report = VerifyReport(
        command=ctx.info_name,
        config={"instances": ids, "seed": seed, "samples": samples, "identities": identities, "universal": universal},
        instances=results,
        passed=all(r.passed for r in results),
        elapsed=time.perf_counter() - start,
    )
    if not as_json:
        console.print(catalog_table(results))
    emit(report, as_json, output, no_timing)
    finish(report.passed)


# older name of the same command
router.command("verify-catalog", hidden=True)(verify_catalog)
