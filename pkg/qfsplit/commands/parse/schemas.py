from typing import Any, Dict, Optional
from pydantic import BaseModel

from ...config.settings import settings


class ParseCheckReport(BaseModel):
    schema_version: str = settings.REPORT_SCHEMA_VERSION
    command: str = "parse-check"
    config: Dict[str, Any]
    p: int
    variables: Dict[str, int]
    field: Dict[str, Any]
    f: str
    G: str
    degree_f: Optional[int] = None
    degree_G: Optional[int] = None
    canonical: str
    elapsed: Optional[float] = None
