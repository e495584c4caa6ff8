# qfsplit/io/presentation.py
"""
Presentation files.

    p: 2
    variables: {x: 1, y: 1, z: 1, w: 2}
    field: {degree: 1}                  # or {degree: 2, generator: t, modulus: [1, 1, 1]}
    parameters: [a]                     # optional
    f: "w^2 + x*y*z*(x + y + z)"
    G: "(x*y + y*z + x*z)*w"            # optional; "generic" gives one symbol per monomial
"""
from pathlib import Path
from typing import Dict, List, Optional, Union
import logging

import yaml
from pydantic import BaseModel, Field, ValidationError, field_validator

from ..config.settings import settings
from ..core.delta_fedder import HypersurfacePresentation, generic_G
from ..core.exceptions import PresentationError
from ..core.fields import ExtensionField, ParameterRing, finite_field
from ..core.parser import parse_polynomial
from ..core.polynomial import WeightedPolyRing

logger = logging.getLogger(__name__)

GENERIC = "generic"


class FieldSpec(BaseModel):
    degree: int = 1
    generator: str = "t"
    modulus: Optional[List[int]] = None

    @field_validator("degree")
    @classmethod
    def degree_positive(cls, v):
        if v < 1:
            raise ValueError("field degree must be at least 1")
        return v


class PresentationFile(BaseModel):
    p: int
    variables: Dict[str, int]
    field: FieldSpec = Field(default_factory=FieldSpec)
    parameters: List[str] = Field(default_factory=list)
    f: str
    G: Optional[str] = None
    check_homogeneity: bool = True

    @field_validator("p")
    @classmethod
    def supported_prime(cls, v):
        if v not in settings.SUPPORTED_PRIMES:
            raise ValueError(f"p must be one of {settings.SUPPORTED_PRIMES}")
        return v

    @field_validator("variables")
    @classmethod
    def positive_weights(cls, v):
        if not v:
            raise ValueError("at least one variable is required")
        bad = [name for name, w in v.items() if w < 1]
        if bad:
            raise ValueError(f"weights must be positive integers ({', '.join(bad)})")
        if "p" in v:
            raise ValueError("'p' is reserved and cannot name a variable")
        return v


def _validation_message(e: ValidationError) -> str:
    parts = []
    for err in e.errors():
        where = ".".join(str(x) for x in err["loc"])
        parts.append(f"{where}: {err['msg']}")
    return "; ".join(parts)


def load_document(text: str) -> PresentationFile:
    try:
        raw = yaml.safe_load(text)
    except yaml.YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        where = f" (line {mark.line + 1}, column {mark.column + 1})" if mark else ""
        raise PresentationError(f"Malformed presentation document{where}") from None
    if not isinstance(raw, dict):
        raise PresentationError("A presentation document must be a mapping")
    try:
        return PresentationFile(**raw)
    except ValidationError as e:
        raise PresentationError(f"Invalid presentation: {_validation_message(e)}") from None


def build_presentation(doc: PresentationFile) -> HypersurfacePresentation:
    k = finite_field(doc.p, doc.field.degree, modulus=doc.field.modulus, generator=doc.field.generator)
    variables = tuple(doc.variables)
    weights = tuple(doc.variables.values())
    base_ring = WeightedPolyRing(variables, weights, ParameterRing(doc.p, doc.parameters, base=k) if doc.parameters else k)
    if doc.G is not None and doc.G.strip() == GENERIC:
        # degree of G comes from f, parsed without the G symbols
        f0 = parse_polynomial(doc.f, base_ring)
        degree = f0.weighted_degree_check().degree
        if degree is None:
            raise PresentationError("A generic G needs a nonzero homogeneous f")
        ring, G = generic_G(base_ring, degree, extra_symbols=doc.parameters)
        f = parse_polynomial(doc.f, ring)
    else:
        ring = base_ring
        f = parse_polynomial(doc.f, ring)
        G = parse_polynomial(doc.G, ring) if doc.G is not None else ring.zero()
    return HypersurfacePresentation(f, G, doc.check_homogeneity)


def parse_presentation_text(text: str) -> HypersurfacePresentation:
    return build_presentation(load_document(text))


def parse_presentation(path: Union[str, Path]) -> HypersurfacePresentation:
    path = Path(path)
    if not path.is_file():
        raise PresentationError(f"Presentation file {path} does not exist")
    logger.info("Loading presentation %s", path)
    return parse_presentation_text(path.read_text(encoding="utf-8"))


def describe_field(h: HypersurfacePresentation) -> Dict:
    domain = h.ring.domain
    k = domain.base if isinstance(domain, ParameterRing) else domain
    if isinstance(k, ExtensionField):
        return {"degree": k.e, "generator": k.generator, "modulus": list(k.modulus)}
    return {"degree": 1}


def serialize_presentation(h: HypersurfacePresentation) -> str:
    """Canonical document; parsing it again reproduces h exactly"""
    ring = h.ring
    doc = {
        "p": h.p,
        "variables": dict(zip(ring.variables, ring.weights)),
        "field": describe_field(h),
    }
    if isinstance(ring.domain, ParameterRing):
        doc["parameters"] = list(ring.domain.symbols)
    doc["f"] = h.f.to_text()
    doc["G"] = h.G.to_text()
    if not h.check_homogeneity:
        doc["check_homogeneity"] = False
    return yaml.safe_dump(doc, sort_keys=False, default_flow_style=None)
