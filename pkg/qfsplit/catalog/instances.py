# qfsplit/catalog/instances.py
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Literal, Mapping, Optional, Tuple
import logging

import numpy as np
import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from ..core.delta_fedder import HypersurfacePresentation, generic_G
from ..core.exceptions import ConstraintError, PresentationError
from ..core.fields import CoefficientDomain, ParameterRing, finite_field
from ..core.parser import parse_parameter, parse_polynomial
from ..core.polynomial import Polynomial, WeightedPolyRing, specialize
from ..models.models import EnumerationMode, Expectation, ExpectationKind, CheckKind

logger = logging.getLogger(__name__)

MANIFEST_PATH = Path(__file__).with_name("manifest.yaml")


class ExpectSpec(BaseModel):
    height: Optional[int] = None
    infinite: bool = False

    @model_validator(mode="after")
    def one_outcome(self):
        if (self.height is None) == (not self.infinite):
            raise ValueError("expect needs exactly one of height or infinite")
        return self

    def to_expectation(self) -> Expectation:
        if self.infinite:
            return Expectation(ExpectationKind.INFINITE)
        return Expectation(ExpectationKind.HEIGHT, self.height)


class SurveySpec(BaseModel):
    level: int
    exponents: List[List[int]]


class CaseSpec(BaseModel):
    name: str
    G: str = "0"
    expect: ExpectSpec
    survey: Optional[SurveySpec] = None


class UniversalSpec(BaseModel):
    bound: Optional[int] = None
    infinite: bool = False
    mode: EnumerationMode
    samples: Optional[int] = None
    field_degree: int = 1
    parameter_samples: int = Field(1, ge=1)

    def to_expectation(self) -> Expectation:
        if self.infinite:
            return Expectation(ExpectationKind.INFINITE)
        return Expectation(ExpectationKind.BOUND, self.bound)


class EliminationSpec(BaseModel):
    symbol: str
    numerator: str
    denominator: str


class IdentitySpec(BaseModel):
    name: str
    kind: CheckKind
    object: Literal["test", "delta"] = "test"
    level: Optional[int] = None
    power: Optional[int] = None
    target: Optional[List[int]] = None
    modulus: Optional[int] = None
    G: Optional[str] = None
    hypotheses: Dict[str, str] = Field(default_factory=dict)
    eliminations: List[EliminationSpec] = Field(default_factory=list)
    expected: str
    note: str = ""

    @model_validator(mode="after")
    def consistent(self):
        if self.kind == CheckKind.COEFFICIENT and self.target is None:
            raise ValueError(f"coefficient check '{self.name}' needs a target monomial")
        if self.object == "test" and self.level is None:
            raise ValueError(f"check '{self.name}' needs a level")
        return self


class SymbolicSpec(BaseModel):
    parameters: List[str]
    substitution: Dict[str, str]
    f: str


class CatalogInstance(BaseModel):
    model_config = ConfigDict(frozen=True)

    id: str
    description: str = ""
    p: int
    variables: Dict[str, int]
    parameters: List[str] = Field(default_factory=list)
    constraint: Optional[str] = None
    sample_field_degrees: List[int] = Field(default_factory=lambda: [1])
    f: str
    symbolic: Optional[SymbolicSpec] = None
    cases: List[CaseSpec]
    universal: Optional[UniversalSpec] = None
    identities: List[IdentitySpec] = Field(default_factory=list)

    @property
    def is_parameterized(self) -> bool:
        return bool(self.parameters)

    def field(self, degree: int = 1) -> CoefficientDomain:
        return finite_field(self.p, degree)

    def ring(self, field: CoefficientDomain, parameters: Optional[List[str]] = None) -> WeightedPolyRing:
        """Polynomial ring of the instance, over a parameter ring when parameters are given"""
        params = self.parameters if parameters is None else parameters
        domain = ParameterRing(self.p, params, base=field) if params else field
        return WeightedPolyRing(tuple(self.variables), tuple(self.variables.values()), domain)

    def template(self, G_text: str, field: CoefficientDomain) -> HypersurfacePresentation:
        """Presentation with the instance parameters left symbolic"""
        ring = self.ring(field)
        return HypersurfacePresentation(parse_polynomial(self.f, ring), parse_polynomial(G_text, ring))

    def constraint_element(self, field: CoefficientDomain):
        if self.constraint is None:
            return None
        params = self.ring(field).domain
        return parse_parameter(self.constraint, params)

    def presentation(
        self, G_text: str, field: CoefficientDomain, assignment: Optional[Mapping[str, object]] = None
    ) -> HypersurfacePresentation:
        """Presentation over ``field`` with the parameters specialised to ``assignment``"""
        template = self.template(G_text, field)
        if not self.is_parameterized:
            return template
        assignment = dict(assignment or {})
        check_constraint(self, field, assignment)
        return HypersurfacePresentation(
            specialize(template.f, assignment, field), specialize(template.G, assignment, field)
        )


def check_constraint(instance: CatalogInstance, field: CoefficientDomain, assignment: Mapping[str, object]):
    element = instance.constraint_element(field)
    if element is None:
        return
    params = instance.ring(field).domain
    value = params.specialize(element, assignment, field)
    if field.is_zero(value):
        shown = ", ".join(f"{s}={field.to_text(assignment[s])}" for s in instance.parameters)
        raise ConstraintError(f"{instance.id}: {shown} violates {instance.constraint} != 0")


def parse_field_element(text: str, field: CoefficientDomain):
    """A constant expression such as ``t + 1`` as an element of ``field``"""
    point = WeightedPolyRing((), (), field)
    return parse_polynomial(text, point).coefficient(())


def parse_assignment(instance: CatalogInstance, texts: Mapping[str, str], field: CoefficientDomain) -> Dict[str, object]:
    unknown = [s for s in texts if s not in instance.parameters]
    if unknown:
        raise ConstraintError(f"{instance.id} has no parameter(s) {', '.join(unknown)}")
    return {s: parse_field_element(v, field) for s, v in texts.items()}


def identity_ring(instance: CatalogInstance, field: CoefficientDomain, G_text: Optional[str] = None) -> Tuple[Polynomial, Polynomial]:
    """
    f and G over the parameter ring used by the identity checks.

    Instances with a symbolic block use its parameters and f. A missing
    ``G_text`` gives the generic G of degree deg f.
    """
    params = instance.symbolic.parameters if instance.symbolic else instance.parameters
    f_text = instance.symbolic.f if instance.symbolic else instance.f
    base = instance.ring(field, params)
    if G_text is not None:
        return parse_polynomial(f_text, base), parse_polynomial(G_text, base)
    degree = parse_polynomial(f_text, base).weighted_degree_check().degree
    ring, G = generic_G(base, degree, extra_symbols=params)
    return parse_polynomial(f_text, ring), G


def translation_mismatches(instance: CatalogInstance, samples: int, seed: int = 0, degree: int = 8) -> List[Dict[str, str]]:
    """
    Assignments where the displayed f and the symbolic f disagree.

    Parameters are drawn over GF(p^degree) and pushed through the
    substitution of the symbolic block.
    """
    if instance.symbolic is None:
        return []
    field = instance.field(degree)
    rng = np.random.default_rng(seed)
    outer = instance.ring(field).domain
    inner = instance.ring(field, instance.symbolic.parameters)
    f_display = parse_polynomial(instance.f, instance.ring(field))
    f_symbolic = parse_polynomial(instance.symbolic.f, inner)
    subst = {s: parse_parameter(text, outer) for s, text in instance.symbolic.substitution.items()}
    bad = []
    for _ in range(samples):
        assignment = {s: field.random_element(rng) for s in instance.parameters}
        values = {s: outer.specialize(e, assignment, field) for s, e in subst.items()}
        lhs = specialize(f_display, assignment, field)
        rhs = specialize(f_symbolic, values, field)
        if lhs != rhs:
            bad.append({s: field.to_text(v) for s, v in assignment.items()})
    if bad:
        logger.error("%s: symbolic f disagrees with the display at %d of %d points", instance.id, len(bad), samples)
    return bad


def _load(path: Path) -> Dict[str, CatalogInstance]:
    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8"))
    except (OSError, yaml.YAMLError) as e:
        raise PresentationError(f"Cannot read catalog manifest {path}: {e}") from None
    out = {}
    for key, body in (raw or {}).get("instances", {}).items():
        try:
            out[key] = CatalogInstance(id=key, **body)
        except ValidationError as e:
            raise PresentationError(f"Invalid catalog entry {key}: {e.errors()[0]['msg']}") from None
    return out


@lru_cache(maxsize=None)
def _default_catalog() -> Dict[str, CatalogInstance]:
    return _load(MANIFEST_PATH)


def load_catalog(path: Optional[Path] = None) -> Dict[str, CatalogInstance]:
    if path is None:
        return _default_catalog()
    return _load(Path(path))


def get_instance(instance_id: str) -> CatalogInstance:
    catalog = load_catalog()
    if instance_id not in catalog:
        raise PresentationError(f"Unknown catalog instance '{instance_id}' (known: {', '.join(catalog)})")
    return catalog[instance_id]
