from typing import Any, Dict, List, Optional
from pydantic import BaseModel
from pydantic.config import ConfigDict

from ...config.settings import settings
from ...core.polynomial import WeightedPolyRing
from ...models.models import CertificateOutcome, HeightVerdict, Outcome


class LevelReport(BaseModel):
    level: int
    exponent: int
    q: int
    member: bool
    witness: Optional[str] = None
    terms: int
    exercised: bool = True

    model_config = ConfigDict(from_attributes=True)


class CertificateReport(BaseModel):
    outcome: CertificateOutcome
    reason: str
    witness: Optional[str] = None


class VerdictReport(BaseModel):
    outcome: Outcome
    height: Optional[int] = None
    max_level: int
    summary: str
    levels: List[LevelReport]
    certificate: Optional[CertificateReport] = None

    @classmethod
    def from_verdict(cls, ring: WeightedPolyRing, verdict: HeightVerdict) -> "VerdictReport":
        def text(m):
            return ring.monomial_text(m) if m is not None else None

        levels = [
            LevelReport(
                level=t.level, exponent=t.exponent, q=t.q, member=t.member,
                witness=text(t.witness), terms=t.terms, exercised=t.exercised,
            )
            for t in verdict.levels
        ]
        certificate = None
        if verdict.certificate is not None:
            c = verdict.certificate
            certificate = CertificateReport(outcome=c.outcome, reason=c.reason, witness=text(c.witness))
        return cls(
            outcome=verdict.outcome,
            height=verdict.height,
            max_level=verdict.max_level,
            summary=verdict.describe(),
            levels=levels,
            certificate=certificate,
        )


class HeightReport(BaseModel):
    schema_version: str = settings.REPORT_SCHEMA_VERSION
    command: str = "height"
    config: Dict[str, Any]
    p: int
    variables: Dict[str, int]
    field: Dict[str, Any]
    f: str
    G: str
    result: VerdictReport
    elapsed: Optional[float] = None
