# qfsplit/core/polynomial.py
"""
Sparse multivariate polynomials over a ``CoefficientDomain`` with a weighted
grading.

A monomial is a tuple of non-negative exponents, one per ring variable.
Terms iterate in the canonical order: weighted degree first, then
lexicographic on the exponent vector, both ascending.
"""
from dataclasses import dataclass
from operator import add
from typing import Callable, Dict, Iterator, List, Mapping, Optional, Sequence, Tuple
import logging

from .exceptions import DomainError, RingMismatchError
from .fields import (
    CoefficientDomain,
    ExtensionField,
    Integers,
    IntegersModPow,
    ParameterRing,
    PrimeField,
)

logger = logging.getLogger(__name__)

Monomial = Tuple[int, ...]

# Domains whose elements are ints that can be accumulated unreduced
_LAZY_INT_DOMAINS = (PrimeField, IntegersModPow, Integers)


@dataclass(frozen=True)
class WeightedPolyRing:
    variables: Tuple[str, ...]
    weights: Tuple[int, ...]
    domain: CoefficientDomain

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if len(self.variables) != len(self.weights):
            raise DomainError("Each variable needs exactly one weight")
        if len(set(self.variables)) != len(self.variables):
            raise DomainError("Variable names must be distinct")
        if any(w < 1 for w in self.weights):
            raise DomainError("Weights must be positive integers")

    @property
    def p(self) -> Optional[int]:
        return self.domain.p

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def with_domain(self, domain: CoefficientDomain) -> "WeightedPolyRing":
        return WeightedPolyRing(self.variables, self.weights, domain)

    def degree(self, m: Monomial) -> int:
        return sum(w * e for w, e in zip(self.weights, m))

    def order_key(self, m: Monomial) -> Tuple[int, Monomial]:
        return (self.degree(m), m)

    def check_monomial(self, m: Sequence[int]) -> Monomial:
        m = tuple(int(e) for e in m)
        if len(m) != self.nvars:
            raise RingMismatchError(f"Exponent vector {m} has {len(m)} entries, ring has {self.nvars} variables")
        if any(e < 0 for e in m):
            raise DomainError(f"Exponent vector {m} has a negative entry")
        return m

    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    def one(self) -> "Polynomial":
        return self.constant(self.domain.one)

    def constant(self, c) -> "Polynomial":
        return Polynomial(self, {(0,) * self.nvars: c})

    def variable(self, name: str) -> "Polynomial":
        i = self.variables.index(name)
        m = [0] * self.nvars
        m[i] = 1
        return Polynomial(self, {tuple(m): self.domain.one})

    def monomial(self, m: Sequence[int], coefficient=None) -> "Polynomial":
        c = self.domain.one if coefficient is None else coefficient
        return Polynomial(self, {self.check_monomial(m): c})

    def monomials_of_degree(self, d: int) -> List[Monomial]:
        """All exponent vectors of weighted degree d, in canonical order"""
        out: List[Monomial] = []

        def rec(i: int, remaining: int, prefix: List[int]):
            if i == self.nvars - 1:
                if remaining % self.weights[i] == 0:
                    out.append(tuple(prefix + [remaining // self.weights[i]]))
                return
            for e in range(remaining // self.weights[i] + 1):
                rec(i + 1, remaining - e * self.weights[i], prefix + [e])

        if d >= 0 and self.nvars:
            rec(0, d, [])
        return sorted(out)

    def monomial_text(self, m: Monomial) -> str:
        parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(self.variables, m) if e]
        return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class HomogeneityReport:
    homogeneous: bool
    degree: Optional[int] = None
    degree_free: bool = False
    witness: Optional[Tuple[Monomial, Monomial]] = None


class Polynomial:
    """Immutable sparse polynomial; zero coefficients are never stored"""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: WeightedPolyRing, terms: Mapping[Monomial, object]):
        domain = ring.domain
        self.ring = ring
        self._terms: Dict[Monomial, object] = {m: c for m, c in terms.items() if not domain.is_zero(c)}

    @classmethod
    def _from_clean(cls, ring: WeightedPolyRing, terms: Dict[Monomial, object]) -> "Polynomial":
        obj = cls.__new__(cls)
        obj.ring = ring
        obj._terms = terms
        return obj

    # -- inspection -----------------------------------------------------

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def monomials(self) -> List[Monomial]:
        return sorted(self._terms, key=self.ring.order_key)

    def terms(self) -> Iterator[Tuple[Monomial, object]]:
        for m in self.monomials():
            yield m, self._terms[m]

    def raw_terms(self) -> Mapping[Monomial, object]:
        return self._terms

    def coefficient(self, m: Sequence[int]):
        m = self.ring.check_monomial(m)
        return self._terms.get(m, self.ring.domain.zero)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.ring != other.ring or self._terms.keys() != other._terms.keys():
            return False
        eq = self.ring.domain.eq
        return all(eq(c, other._terms[m]) for m, c in self._terms.items())

    __hash__ = None

    # -- arithmetic -----------------------------------------------------

    def _check(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            raise RingMismatchError(f"Cannot combine a polynomial with {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError("Operands live in different polynomial rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        domain = self.ring.domain
        acc = dict(self._terms)
        for m, c in other._terms.items():
            if m in acc:
                s = domain.add(acc[m], c)
                if domain.is_zero(s):
                    del acc[m]
                else:
                    acc[m] = s
            else:
                acc[m] = c
        return Polynomial._from_clean(self.ring, acc)

    def __neg__(self) -> "Polynomial":
        neg = self.ring.domain.neg
        return Polynomial._from_clean(self.ring, {m: neg(c) for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        return self + (-other)

    def __mul__(self, other) -> "Polynomial":
        if not isinstance(other, Polynomial):
            return self.scale(other)
        return self.multiply(other)

    def __pow__(self, k: int) -> "Polynomial":
        return self.power(k)

    def scale(self, c) -> "Polynomial":
        domain = self.ring.domain
        if isinstance(c, int) and not isinstance(domain, _LAZY_INT_DOMAINS):
            c = domain.from_int(c)
        return Polynomial(self.ring, {m: domain.mul(a, c) for m, a in self._terms.items()})

    def multiply(
        self,
        other: "Polynomial",
        bound: Optional[int] = None,
        target: Optional[Monomial] = None,
    ) -> "Polynomial":
        """Product, optionally reduced modulo m^[bound] or restricted to divisors of target"""
        self._check(other)
        keep = _keeper(bound, target)
        domain = self.ring.domain
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        acc: Dict[Monomial, object] = {}
        if isinstance(domain, _LAZY_INT_DOMAINS):
            get = acc.get
            for mb, cb in b.items():
                for ma, ca in a.items():
                    m = tuple(map(add, ma, mb))
                    if keep is None or keep(m):
                        acc[m] = get(m, 0) + ca * cb
            reduce = domain.from_int
            return Polynomial(self.ring, {m: reduce(c) for m, c in acc.items()})
        dmul, dadd = domain.mul, domain.add
        for mb, cb in b.items():
            for ma, ca in a.items():
                m = tuple(map(add, ma, mb))
                if keep is None or keep(m):
                    c = dmul(ca, cb)
                    acc[m] = dadd(acc[m], c) if m in acc else c
        return Polynomial(self.ring, acc)

    def power(self, k: int, bound: Optional[int] = None) -> "Polynomial":
        """Square-and-multiply, optionally modulo m^[bound]"""
        if k < 0:
            raise DomainError("Polynomial powers must be non-negative")
        result = self.ring.one()
        base = self.truncate(bound) if bound is not None else self
        while k:
            if k & 1:
                result = result.multiply(base, bound=bound)
            k >>= 1
            if k:
                base = base.multiply(base, bound=bound)
        return result

    def truncate(self, q: Optional[int]) -> "Polynomial":
        """Reduction modulo m^[q]: drop monomials with an exponent >= q"""
        if q is None:
            return self
        return Polynomial._from_clean(self.ring, {m: c for m, c in self._terms.items() if max(m, default=0) < q})

    def restrict(self, target: Monomial) -> "Polynomial":
        """Keep only monomials dividing target"""
        keep = _keeper(None, target)
        return Polynomial._from_clean(self.ring, {m: c for m, c in self._terms.items() if keep(m)})

    def frobenius_twist(self) -> "Polynomial":
        """h^p computed termwise: c x^a -> c^p x^(pa)"""
        domain = self.ring.domain
        p = domain.p
        if p is None or domain.characteristic != p:
            raise DomainError(f"Frobenius twist needs a domain of characteristic p, got {domain}")
        frob = domain.frobenius
        return Polynomial(self.ring, {tuple(p * e for e in m): frob(c) for m, c in self._terms.items()})

    def map_coefficients(self, fn: Callable, ring: Optional[WeightedPolyRing] = None) -> "Polynomial":
        ring = ring or self.ring
        return Polynomial(ring, {m: fn(c) for m, c in self._terms.items()})

    def exact_divide(self, k: int) -> "Polynomial":
        """Division of an integer polynomial by an integer; a remainder is an error"""
        if not isinstance(self.ring.domain, Integers):
            raise DomainError("Exact scalar division needs integer coefficients")
        out = {}
        for m, c in self._terms.items():
            q, r = divmod(c, k)
            if r:
                raise DomainError(f"Coefficient {c} of {self.ring.monomial_text(m)} is not divisible by {k}")
            out[m] = q
        return Polynomial._from_clean(self.ring, out)

    def evaluate(self, values: Sequence, algebra) -> object:
        """Evaluate at ``values`` in any object with from_int/add/mul/pow (integer coefficients)"""
        if len(values) != self.ring.nvars:
            raise RingMismatchError("Need one value per variable")
        cache: Dict[Tuple[int, int], object] = {}
        total = algebra.zero
        for m, c in self._terms.items():
            term = algebra.from_int(c)
            for i, e in enumerate(m):
                if e:
                    key = (i, e)
                    if key not in cache:
                        cache[key] = algebra.pow(values[i], e)
                    term = algebra.mul(term, cache[key])
            total = algebra.add(total, term)
        return total

    # -- grading --------------------------------------------------------

    def weighted_degree_check(self) -> HomogeneityReport:
        if not self._terms:
            return HomogeneityReport(homogeneous=True, degree=None, degree_free=True)
        ms = self.monomials()
        first = ms[0]
        d = self.ring.degree(first)
        for m in ms[1:]:
            if self.ring.degree(m) != d:
                return HomogeneityReport(homogeneous=False, witness=(first, m))
        return HomogeneityReport(homogeneous=True, degree=d)

    # -- text -----------------------------------------------------------

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        domain = self.ring.domain
        one = domain.one
        chunks: List[str] = []
        for m, c in self.terms():
            negative = domain.is_negative(c)
            mag = domain.neg(c) if negative else c
            mono = self.ring.monomial_text(m)
            ctext = domain.to_text(mag)
            if " " in ctext:
                ctext = f"({ctext})"
            if mono == "1":
                body = ctext
            elif domain.eq(mag, one):
                body = mono
            else:
                body = f"{ctext}*{mono}"
            if not chunks:
                chunks.append(f"-{body}" if negative else body)
            else:
                chunks.append(f" - {body}" if negative else f" + {body}")
        return "".join(chunks)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"


def _keeper(bound: Optional[int], target: Optional[Monomial]) -> Optional[Callable[[Monomial], bool]]:
    if bound is None and target is None:
        return None
    if target is None:
        return lambda m: max(m, default=0) < bound
    if bound is None:
        return lambda m: all(x <= t for x, t in zip(m, target))
    return lambda m: max(m, default=0) < bound and all(x <= t for x, t in zip(m, target))


# -- operations ---------------------------------------------------------


def poly_arith(kind: str, a: Polynomial, b=None) -> Polynomial:
    if kind == "negation":
        return -a
    if kind in ("sum", "product", "power") and b is None:
        raise DomainError(f"Arithmetic kind '{kind}' needs a second operand")
    if kind == "sum":
        return a + b
    if kind == "product":
        return a * b
    if kind == "power":
        return a.power(b)
    raise DomainError(f"Unknown arithmetic kind '{kind}'")


def coefficient_of(h: Polynomial, m: Sequence[int]):
    return h.coefficient(m)


def restricted_product(factors: Sequence[Polynomial], target: Sequence[int]):
    """Coefficient of ``target`` in the product, discarding non-divisors of target on the way"""
    if not factors:
        raise DomainError("restricted_product needs at least one factor")
    ring = factors[0].ring
    target = ring.check_monomial(target)
    for h in factors[1:]:
        if h.ring != ring:
            raise RingMismatchError("Factors live in different polynomial rings")
    # smallest factors first keeps partial products small
    ordered = sorted((h.restrict(target) for h in factors), key=len)
    acc = ordered[0]
    for h in ordered[1:]:
        acc = acc.multiply(h, target=target)
        if acc.is_zero():
            break
    return acc.coefficient(target)


def weighted_degree_check(h: Polynomial) -> HomogeneityReport:
    return h.weighted_degree_check()


def frobenius_twist(h: Polynomial) -> Polynomial:
    return h.frobenius_twist()


def specialize(h: Polynomial, assignment: Mapping[str, object], target: CoefficientDomain) -> Polynomial:
    """Evaluate the parameter coefficients of h at field elements"""
    domain = h.ring.domain
    if not isinstance(domain, ParameterRing):
        raise DomainError("Only polynomials over a parameter ring can be specialized")
    ring = h.ring.with_domain(target)
    return h.map_coefficients(lambda c: domain.specialize(c, assignment, target), ring)


def substitute(h: Polynomial, assignment: Mapping[str, object]) -> Polynomial:
    """Replace some parameters by parameter-ring elements, staying in the same ring"""
    domain = h.ring.domain
    if not isinstance(domain, ParameterRing):
        raise DomainError("Only polynomials over a parameter ring accept substitutions")
    return h.map_coefficients(lambda c: domain.substitute(c, assignment))


def pth_root(domain: CoefficientDomain, c):
    if not isinstance(domain, (PrimeField, ExtensionField)):
        raise DomainError(f"p-th roots are only supported over finite fields, not {domain}")
    return domain.pth_root(c)

