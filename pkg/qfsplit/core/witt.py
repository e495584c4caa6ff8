# qfsplit/core/witt.py
"""
Truncated p-typical Witt vectors.

The universal polynomials S (sum), P (product), N (negation) and F
(Frobenius) are derived from the ghost components

    phi_m(X) = X0^(p^m) + p*X1^(p^(m-1)) + ... + p^m*Xm

by solving phi_m(C0, ..., Cm) = target_m one coordinate at a time over the
integers. Each solve is an exact division by p^m; a remainder means the
recursion is broken and is reported as a ``WittTableError``.

Component m of a kind does not depend on the truncation length, so
components are cached per (p, kind, m) and embedded into the ring of each
table that needs them.
"""
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Dict, List, Optional, Sequence, Tuple
import logging

from ..config.settings import settings
from .exceptions import DomainError, RingMismatchError, WittTableError
from .fields import CoefficientDomain, Integers, is_prime
from .polynomial import Polynomial, WeightedPolyRing

logger = logging.getLogger(__name__)

KINDS = ("S", "P", "N", "F")


def _universal_ring(p: int, n: int) -> WeightedPolyRing:
    names = tuple(f"X{i}" for i in range(n)) + tuple(f"Y{i}" for i in range(n))
    weights = tuple(p ** i for i in range(n)) * 2
    return WeightedPolyRing(names, weights, Integers())


def _embed(h: Polynomial, ring: WeightedPolyRing) -> Polynomial:
    """Move a polynomial in X0..,Y0.. into a ring with more coordinates"""
    src = h.ring.nvars // 2
    pad = (0,) * (ring.nvars // 2 - src)
    return Polynomial._from_clean(ring, {m[:src] + pad + m[src:] + pad: c for m, c in h.raw_terms().items()})


def ghost_polynomial(p: int, m: int, ring: WeightedPolyRing, letter: str = "X") -> Polynomial:
    """phi_m in the variables letter0..letterm of ring"""
    total = ring.zero()
    for i in range(m + 1):
        total = total + ring.variable(f"{letter}{i}").power(p ** (m - i)) * (p ** i)
    return total


def _ghost_target(p: int, kind: str, m: int, ring: WeightedPolyRing) -> Polynomial:
    if kind == "S":
        return ghost_polynomial(p, m, ring, "X") + ghost_polynomial(p, m, ring, "Y")
    if kind == "P":
        return ghost_polynomial(p, m, ring, "X") * ghost_polynomial(p, m, ring, "Y")
    if kind == "N":
        return -ghost_polynomial(p, m, ring, "X")
    if kind == "F":
        return ghost_polynomial(p, m + 1, ring, "X")
    raise WittTableError(f"Unknown Witt polynomial kind '{kind}'")


@lru_cache(maxsize=None)
def _component(p: int, kind: str, m: int) -> Polynomial:
    # F_m reads X_{m+1}, everything else stops at index m
    ring = _universal_ring(p, m + 2 if kind == "F" else m + 1)
    acc = _ghost_target(p, kind, m, ring)
    for i in range(m):
        prev = _embed(_component(p, kind, i), ring)
        acc = acc - prev.power(p ** (m - i)) * (p ** i)
    try:
        out = acc.exact_divide(p ** m)
    except DomainError as e:
        raise WittTableError(f"Ghost recursion for {kind}{m} at p={p} is not exact: {e.detail}") from None
    logger.info("Derived %s%d for p=%d (%d terms)", kind, m, p, len(out))
    return out


@dataclass(frozen=True)
class GradingEntry:
    kind: str
    index: int
    homogeneous: bool
    degree: Optional[int]
    terms: int


@dataclass(frozen=True)
class UniversalWittTable:
    """S/P/N/F polynomials of W_n for the prime p, derived on first access"""

    p: int
    n: int

    @cached_property
    def ring(self) -> WeightedPolyRing:
        return _universal_ring(self.p, self.n)

    def _kind(self, kind: str, count: int) -> Tuple[Polynomial, ...]:
        return tuple(_embed(_component(self.p, kind, m), self.ring) for m in range(count))

    @cached_property
    def S(self) -> Tuple[Polynomial, ...]:
        return self._kind("S", self.n)

    @cached_property
    def P(self) -> Tuple[Polynomial, ...]:
        return self._kind("P", self.n)

    @cached_property
    def N(self) -> Tuple[Polynomial, ...]:
        return self._kind("N", self.n)

    @cached_property
    def F(self) -> Tuple[Polynomial, ...]:
        return self._kind("F", self.n - 1)

    def polynomials(self, kind: str) -> Tuple[Polynomial, ...]:
        if kind not in KINDS:
            raise WittTableError(f"Unknown Witt polynomial kind '{kind}'")
        return getattr(self, kind)

    def export_text(self, kinds: Sequence[str] = KINDS) -> str:
        lines = [f"# Witt polynomials p={self.p} n={self.n}"]
        for kind in kinds:
            for i, h in enumerate(self.polynomials(kind)):
                lines.append(f"{kind}{i} = {h.to_text()}")
        return "\n".join(lines) + "\n"

    def grading_report(self, kinds: Sequence[str] = KINDS) -> List[GradingEntry]:
        """Weighted homogeneity of every polynomial under deg X_i = deg Y_i = p^i"""
        out = []
        for kind in kinds:
            for i, h in enumerate(self.polynomials(kind)):
                report = h.weighted_degree_check()
                out.append(GradingEntry(kind, i, report.homogeneous, report.degree, len(h)))
        return out


@lru_cache(maxsize=None)
def _table(p: int, n: int) -> UniversalWittTable:
    return UniversalWittTable(p, n)


def derive_table(p: int, n: int) -> UniversalWittTable:
    if not is_prime(p):
        raise WittTableError(f"{p} is not prime")
    if n < 1 or n > settings.WITT_LENGTH_CAP:
        raise WittTableError(f"Witt length {n} outside 1..{settings.WITT_LENGTH_CAP}")
    return _table(p, n)


class WittElement:
    """A vector (a0, ..., a_{n-1}) of W_n(A); A is any coefficient domain"""

    __slots__ = ("table", "domain", "coords")

    def __init__(self, table: UniversalWittTable, domain: CoefficientDomain, coords: Sequence):
        coords = tuple(coords)
        if len(coords) != table.n:
            raise RingMismatchError(f"W_{table.n} needs {table.n} coordinates, got {len(coords)}")
        self.table = table
        self.domain = domain
        self.coords = coords

    @property
    def length(self) -> int:
        return self.table.n

    @property
    def p(self) -> int:
        return self.table.p

    def _check(self, other: "WittElement"):
        if not isinstance(other, WittElement):
            raise RingMismatchError(f"Cannot combine a Witt vector with {type(other).__name__}")
        if (other.table.p, other.table.n) != (self.table.p, self.table.n):
            raise RingMismatchError("Witt vectors have different primes or lengths")
        if other.domain != self.domain:
            raise RingMismatchError("Witt vectors have different coefficient rings")

    def _apply(self, polys: Sequence[Polynomial], ys: Optional[Sequence] = None) -> "WittElement":
        zero = self.domain.zero
        values = list(self.coords) + list(ys if ys is not None else [zero] * self.length)
        return WittElement(self.table, self.domain, [h.evaluate(values, self.domain) for h in polys])

    def __add__(self, other: "WittElement") -> "WittElement":
        self._check(other)
        return self._apply(self.table.S, other.coords)

    def __mul__(self, other: "WittElement") -> "WittElement":
        self._check(other)
        return self._apply(self.table.P, other.coords)

    def __neg__(self) -> "WittElement":
        return self._apply(self.table.N)

    def __sub__(self, other: "WittElement") -> "WittElement":
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WittElement):
            return NotImplemented
        if (other.table.p, other.table.n) != (self.table.p, self.table.n) or other.domain != self.domain:
            return False
        return all(self.domain.eq(a, b) for a, b in zip(self.coords, other.coords))

    __hash__ = None

    def ghost(self) -> List:
        """Ghost components phi_0, ..., phi_{n-1} evaluated in the coefficient domain"""
        dom, p = self.domain, self.p
        out = []
        for m in range(self.length):
            total = dom.zero
            for i in range(m + 1):
                total = dom.add(total, dom.mul(dom.from_int(p ** i), dom.pow(self.coords[i], p ** (m - i))))
            out.append(total)
        return out

    def to_text(self) -> str:
        return "(" + ", ".join(self.domain.to_text(c) for c in self.coords) + ")"

    def __repr__(self) -> str:
        return f"WittElement{self.to_text()}"


# -- operations ---------------------------------------------------------


def witt_zero(table: UniversalWittTable, domain: CoefficientDomain) -> WittElement:
    return WittElement(table, domain, [domain.zero] * table.n)


def teichmuller(a, table: UniversalWittTable, domain: CoefficientDomain) -> WittElement:
    """[a] = (a, 0, ..., 0)"""
    return WittElement(table, domain, [a] + [domain.zero] * (table.n - 1))


def witt_from_int(k: int, table: UniversalWittTable, domain: CoefficientDomain) -> WittElement:
    """Image of the integer k under Z -> W_n(A)"""
    result = witt_zero(table, domain)
    base = teichmuller(domain.one, table, domain)
    if k < 0:
        base, k = -base, -k
    while k:
        if k & 1:
            result = result + base
        k >>= 1
        if k:
            base = base + base
    return result


def witt_ring_op(kind: str, a: WittElement, b: Optional[WittElement] = None) -> WittElement:
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "neg":
        return -a
    raise WittTableError(f"Unknown Witt operation '{kind}'")


def frobenius_W(a: WittElement) -> WittElement:
    """F: W_n(A) -> W_{n-1}(A)"""
    if a.length < 2:
        raise WittTableError("Frobenius needs a Witt vector of length at least 2")
    values = list(a.coords) + [a.domain.zero] * a.length
    coords = [h.evaluate(values, a.domain) for h in a.table.F]
    return WittElement(derive_table(a.p, a.length - 1), a.domain, coords)


def verschiebung(a: WittElement) -> WittElement:
    """V: W_n(A) -> W_{n+1}(A), (a0, a1, ...) -> (0, a0, a1, ...)"""
    table = derive_table(a.p, a.length + 1)
    return WittElement(table, a.domain, (a.domain.zero,) + a.coords)


def restrict(a: WittElement) -> WittElement:
    """R: W_{n+1}(A) -> W_n(A), drop the last coordinate"""
    if a.length < 2:
        raise WittTableError("Restriction needs a Witt vector of length at least 2")
    return WittElement(derive_table(a.p, a.length - 1), a.domain, a.coords[:-1])


def from_ghost(values: Sequence[int], table: UniversalWittTable) -> WittElement:
    """Inverse of the ghost map over the integers; values must lie in its image"""
    p = table.p
    coords: List[int] = []
    for m, w in enumerate(values):
        rest = w - sum(p ** i * coords[i] ** (p ** (m - i)) for i in range(m))
        q, r = divmod(rest, p ** m)
        if r:
            raise WittTableError(f"Ghost component {m} is not in the image of the ghost map")
        coords.append(q)
    return WittElement(table, Integers(), coords)


class PolynomialAlgebra(CoefficientDomain):
    """k[x]/m^[bound] as a coefficient domain, so Witt vectors can have polynomial entries"""

    def __init__(self, ring: WeightedPolyRing, bound: int):
        if bound < 1:
            raise DomainError("Truncation bound must be positive")
        self.ring = ring
        self.bound = bound
        self.p = ring.domain.p
        self.characteristic = ring.domain.characteristic

    def __repr__(self):
        return f"PolynomialAlgebra({list(self.ring.variables)}, bound={self.bound})"

    def __eq__(self, other):
        return isinstance(other, PolynomialAlgebra) and (other.ring, other.bound) == (self.ring, self.bound)

    def __hash__(self):
        return hash(("PolynomialAlgebra", self.ring, self.bound))

    def from_int(self, n: int) -> Polynomial:
        return self.ring.constant(self.ring.domain.from_int(n)).truncate(self.bound)

    def is_zero(self, a) -> bool:
        return a.is_zero()

    def eq(self, a, b) -> bool:
        return a == b

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a.multiply(b, bound=self.bound)

    def pow(self, a, k: int):
        return a.power(k, bound=self.bound)

    def frobenius(self, a):
        return a.frobenius_twist().truncate(self.bound)

    def to_text(self, a) -> str:
        return a.to_text()

    def random_element(self, rng, terms: int = 4):
        base = self.ring.domain
        acc: Dict[Tuple[int, ...], object] = {}
        for _ in range(terms):
            m = tuple(int(e) for e in rng.integers(0, self.bound, size=self.ring.nvars))
            acc[m] = base.add(acc.get(m, base.zero), base.random_element(rng))
        return Polynomial(self.ring, acc)
