# qfsplit/catalog/runner.py
from typing import Dict, List, Mapping, Optional, Tuple
import logging

from ..core.delta_fedder import level_test, qfs_height
from ..core.fields import CoefficientDomain, ExtensionField
from .instances import CaseSpec, CatalogInstance, get_instance, parse_assignment
from .sampling import sample_parameters
from ..models.models import CaseReport, ExpectationKind

logger = logging.getLogger(__name__)


def field_label(field: CoefficientDomain) -> str:
    if isinstance(field, ExtensionField):
        return f"GF({field.p}^{field.e})"
    return f"F_{field.p}"


def run_case(
    instance: CatalogInstance, case: CaseSpec, field: CoefficientDomain, assignment: Optional[Mapping[str, object]] = None
) -> CaseReport:
    assignment = dict(assignment or {})
    expected = case.expect.to_expectation()
    h = instance.presentation(case.G, field, assignment)
    # a stated height only needs levels up to it; a certificate needs none past 2
    cutoff = expected.value if expected.kind == ExpectationKind.HEIGHT else 2
    verdict = qfs_height(h, max_level=cutoff)
    survey = []
    if case.survey is not None:
        test = level_test(h, case.survey.level).test
        for e in case.survey.exponents:
            m = h.ring.check_monomial(e)
            survey.append((m, field.to_text(test.coefficient(m))))
    report = CaseReport(
        instance=instance.id,
        case=case.name,
        field_label=field_label(field),
        assignment={s: field.to_text(v) for s, v in assignment.items()},
        expected=expected,
        verdict=verdict,
        survey=survey,
    )
    if report.passed:
        logger.info("%s [%s] %s: height %s", instance.id, case.name, report.assignment, verdict.describe())
    else:
        logger.error(
            "%s [%s] %s: expected %s, computed %s",
            instance.id, case.name, report.assignment, expected.describe(), verdict.describe(),
        )
    return report


def instance_assignments(
    instance: CatalogInstance,
    assignment: Optional[Mapping[str, str]] = None,
    field_degree: Optional[int] = None,
    samples: int = 10,
    seed: int = 0,
) -> List[Tuple[CoefficientDomain, Dict[str, object]]]:
    """Fields and parameter values a catalog run covers"""
    if not instance.is_parameterized:
        return [(instance.field(field_degree or 1), {})]
    if assignment:
        field = instance.field(field_degree or instance.sample_field_degrees[0])
        return [(field, parse_assignment(instance, assignment, field))]
    degrees = [field_degree] if field_degree else instance.sample_field_degrees
    out = []
    for degree in degrees:
        field = instance.field(degree)
        params = instance.ring(field).domain
        constraint = instance.constraint_element(field)
        if constraint is None:
            constraint = params.one
        for values in sample_parameters(constraint, params, field, samples, seed):
            out.append((field, values))
    return out


def run_instance(
    instance_id: str,
    assignment: Optional[Mapping[str, str]] = None,
    field_degree: Optional[int] = None,
    samples: int = 10,
    seed: int = 0,
) -> List[CaseReport]:
    """Every case of a catalog instance at each covered parameter assignment"""
    instance = get_instance(instance_id)
    reports = []
    for field, values in instance_assignments(instance, assignment, field_degree, samples, seed):
        for case in instance.cases:
            reports.append(run_case(instance, case, field, values))
    return reports
