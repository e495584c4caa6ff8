from typing import Any, Dict, Optional
from pydantic import BaseModel

from ...config.settings import settings


class Delta1Report(BaseModel):
    schema_version: str = settings.REPORT_SCHEMA_VERSION
    command: str = "delta1"
    config: Dict[str, Any]
    p: int
    f: str
    G: str
    power: int
    modulus: Optional[int] = None
    delta: str
    terms: int
    degree: Optional[int] = None
    shortcut_agrees: Optional[bool] = None
    elapsed: Optional[float] = None
