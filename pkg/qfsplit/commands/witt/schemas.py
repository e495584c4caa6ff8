from typing import Any, Dict, List, Optional
from pydantic import BaseModel
from pydantic.config import ConfigDict

from ...config.settings import settings


class GradingReport(BaseModel):
    kind: str
    index: int
    homogeneous: bool
    degree: Optional[int] = None
    terms: int

    model_config = ConfigDict(from_attributes=True)


class WittTableReport(BaseModel):
    schema_version: str = settings.REPORT_SCHEMA_VERSION
    command: str = "witt-table"
    config: Dict[str, Any]
    p: int
    n: int
    polynomials: Dict[str, List[str]]
    grading: List[GradingReport]
    elapsed: Optional[float] = None
