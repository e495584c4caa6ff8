# qfsplit/core/exceptions.py
from typing import Optional, Tuple


class QfsError(Exception):
    """Base class for every error raised by qfsplit"""

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


class RingMismatchError(QfsError):
    pass


class DomainError(QfsError):
    """Operation not available for the coefficient domain"""
    pass


class ExpressionSyntaxError(QfsError):
    def __init__(self, detail: str, line: int = 1, column: int = 1):
        super().__init__(f"{detail} (line {line}, column {column})")
        self.line = line
        self.column = column


class UnknownSymbolError(QfsError):
    def __init__(self, name: str, line: Optional[int] = None, column: Optional[int] = None):
        where = f" (line {line}, column {column})" if line is not None else ""
        super().__init__(f"Unknown identifier '{name}'{where}")
        self.name = name


class InhomogeneousError(QfsError):
    def __init__(self, detail: str, witness: Tuple[str, str]):
        super().__init__(f"{detail}: terms {witness[0]} and {witness[1]} have different weighted degrees")
        self.witness = witness


class WittTableError(QfsError):
    pass


class LevelBoundError(QfsError):
    pass


class ConstraintError(QfsError):
    pass


class PresentationError(QfsError):
    pass
