from typing import Any, Dict, List, Optional
from pydantic import BaseModel

from ...config.settings import settings
from ...models.models import EnumerationMode


class CounterexampleReport(BaseModel):
    assignment: Dict[str, str]
    coefficients: List[int]
    G: str


class EnumerationReport(BaseModel):
    schema_version: str = settings.REPORT_SCHEMA_VERSION
    command: str = "enumerate"
    config: Dict[str, Any]
    instance: str
    mode: EnumerationMode
    claim: str
    field: str
    assignments: List[Dict[str, str]]
    monomials: List[str]
    space_size: int
    checked: int
    confirmed: bool
    counterexamples: List[CounterexampleReport]
    elapsed: Optional[float] = None
