# qfsplit/io/reports.py
from pathlib import Path
from typing import Union
import logging
import os
import tempfile

from pydantic import BaseModel

logger = logging.getLogger(__name__)


def render_json(report: BaseModel, timing: bool = True) -> str:
    """Canonical JSON of a report; without timing the text only depends on the inputs"""
    exclude = None if timing else {"elapsed"}
    return report.model_dump_json(indent=2, exclude=exclude) + "\n"


def write_atomic(path: Union[str, Path], text: str) -> Path:
    """Write text next to ``path`` and rename it into place"""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
    logger.info("Wrote %s", path)
    return path


def write_report(path: Union[str, Path], report: BaseModel, timing: bool = True) -> Path:
    return write_atomic(path, render_json(report, timing))
