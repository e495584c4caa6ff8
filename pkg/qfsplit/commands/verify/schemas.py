from typing import Any, Dict, List, Optional
from pydantic import BaseModel

from ...config.settings import settings
from ...models.models import CheckKind, EnumerationMode
from ..height.schemas import VerdictReport


class CaseResult(BaseModel):
    case: str
    field: str
    assignment: Dict[str, str]
    expected: str
    computed: VerdictReport
    survey: Dict[str, str] = {}
    passed: bool


class IdentityResult(BaseModel):
    name: str
    kind: CheckKind
    target: Optional[str] = None
    expected: str
    computed: str
    note: str = ""
    passed: bool


class ClaimResult(BaseModel):
    claim: str
    mode: EnumerationMode
    field: str
    assignments: List[Dict[str, str]]
    checked: int
    space_size: int
    counterexamples: int
    passed: bool


class InstanceResult(BaseModel):
    instance: str
    description: str
    cases: List[CaseResult]
    identities: List[IdentityResult]
    universal: Optional[ClaimResult] = None
    passed: bool


class VerifyReport(BaseModel):
    schema_version: str = settings.REPORT_SCHEMA_VERSION
    command: str = "verify-paper"
    config: Dict[str, Any]
    instances: List[InstanceResult]
    passed: bool
    elapsed: Optional[float] = None
