# qfsplit/models/models.py
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple
import enum

from ..core.polynomial import Monomial, Polynomial


class Outcome(str, enum.Enum):
    HEIGHT = "height"
    CERTIFIED_INFINITE = "certified_infinite"
    EXCEEDS_CUTOFF = "exceeds_cutoff"


class CertificateOutcome(str, enum.Enum):
    CERTIFIED_INFINITE = "certified_infinite"
    INCONCLUSIVE = "inconclusive"


class ExpectationKind(str, enum.Enum):
    HEIGHT = "height"
    INFINITE = "infinite"
    BOUND = "bound"


class EnumerationMode(str, enum.Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


class CheckKind(str, enum.Enum):
    COEFFICIENT = "coefficient"
    RESIDUE = "residue"


@dataclass(frozen=True)
class MembershipResult:
    """Outcome of a Frobenius-power membership test T in m^[q]"""
    q: int
    member: bool
    witness: Optional[Monomial] = None


@dataclass(frozen=True)
class LevelTest:
    """
    Level-n Fedder-type test.

    ``test`` holds T_n reduced modulo m^[p^n]; the reduction never changes
    the verdict and keeps the witness.
    """
    level: int
    exponent: int
    q: int
    test: Polynomial
    member: bool
    witness: Optional[Monomial] = None
    exercised: bool = True

    @property
    def terms(self) -> int:
        return len(self.test)


@dataclass(frozen=True)
class CertificateResult:
    outcome: CertificateOutcome
    reason: str
    witness: Optional[Monomial] = None


@dataclass
class HeightVerdict:
    outcome: Outcome
    height: Optional[int]
    max_level: int
    levels: List[LevelTest] = field(default_factory=list)
    certificate: Optional[CertificateResult] = None
    elapsed: float = 0.0

    def describe(self) -> str:
        if self.outcome == Outcome.HEIGHT:
            return str(self.height)
        if self.outcome == Outcome.CERTIFIED_INFINITE:
            return "infinite (certified)"
        return f"> {self.max_level}"


@dataclass(frozen=True)
class Expectation:
    """An expected outcome for one choice of G: a height, infinity, or an upper bound for every G"""
    kind: ExpectationKind
    value: Optional[int] = None

    def describe(self) -> str:
        if self.kind == ExpectationKind.HEIGHT:
            return str(self.value)
        if self.kind == ExpectationKind.INFINITE:
            return "infinite (certified)"
        return f"<= {self.value} for every G"

    def matches(self, verdict: HeightVerdict) -> bool:
        if self.kind == ExpectationKind.HEIGHT:
            return verdict.outcome == Outcome.HEIGHT and verdict.height == self.value
        if self.kind == ExpectationKind.INFINITE:
            return verdict.outcome == Outcome.CERTIFIED_INFINITE
        return verdict.outcome == Outcome.HEIGHT and verdict.height <= self.value


@dataclass(frozen=True)
class IdentityCheck:
    instance: str
    name: str
    kind: CheckKind
    target: Optional[Monomial]
    expected: str
    computed: str
    passed: bool
    note: str = ""


@dataclass(frozen=True)
class EnumerationJob:
    instance: str
    mode: EnumerationMode
    bound: Optional[int]
    samples: Optional[int] = None
    seed: Optional[int] = None
    workers: int = 1
    batch_size: int = 4096
    assignment: Dict[str, str] = field(default_factory=dict)
    field_degree: int = 1
    # assignments drawn when the instance has parameters and none is fixed
    parameter_samples: int = 1


@dataclass
class EnumerationResult:
    job: EnumerationJob
    space_size: int
    checked: int
    counterexamples: List[Tuple[int, ...]] = field(default_factory=list)
    monomials: List[Monomial] = field(default_factory=list)
    field_label: str = ""
    assignment: Dict[str, str] = field(default_factory=dict)
    elapsed: float = 0.0

    @property
    def confirmed(self) -> bool:
        return not self.counterexamples


@dataclass
class CaseReport:
    """One catalog case evaluated at one parameter assignment"""
    instance: str
    case: str
    field_label: str
    assignment: Dict[str, str]
    expected: Expectation
    verdict: HeightVerdict
    survey: List[Tuple[Monomial, str]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.expected.matches(self.verdict)
