# qfsplit/core/delta_fedder.py
"""
Quasi-F-split heights of W(k)[x]/(f + pG).

f + pG is encoded in W_2 of the polynomial ring: every term c*x^a of f
becomes the Teichmueller vector (c*x^a, 0), every term d*x^b of G becomes
p*[d*x^b] = (0, d^p * x^(pb)). Delta_1 of a power of f + pG is the second
coordinate of the corresponding power of the encoding.

Level tests, with D = Delta_1((f + pG)^(p-1)) and e_n = 1 + p + ... + p^(n-2):

    T_1 = f^(p-1)
    T_n = f^(p-1) * D^(e_n)          (n >= 2)

Level n passes (the ring is not n-quasi-F-split) iff T_n lies in m^[p^n].
D^(e_n) is kept modulo m^[p^n] and advanced by E_{n+1} = E_n^p * D, which
is exact modulo m^[p^(n+1)] in characteristic p.
"""
from dataclasses import dataclass
from itertools import combinations_with_replacement
from math import comb, factorial
from collections import Counter
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple
import logging
import time

import numpy as np

from ..config.settings import settings
from ..models.models import (
    CertificateOutcome,
    CertificateResult,
    HeightVerdict,
    LevelTest,
    MembershipResult,
    Outcome,
)
from .batch import BatchField, membership_mask, take
from .exceptions import DomainError, InhomogeneousError, LevelBoundError, PresentationError, RingMismatchError
from .fields import IntegersModPow, ParameterRing, PrimeField
from .polynomial import Monomial, Polynomial, WeightedPolyRing, pth_root

logger = logging.getLogger(__name__)

# (p, n) pairs whose level criterion is backed by worked examples
EXERCISED_LEVELS = {(2, 2), (2, 3), (2, 4), (3, 2), (3, 3)}


def g_symbol(m: Monomial) -> str:
    """Parameter name of the G-coefficient of x^m, e.g. G0111"""
    if all(e < 10 for e in m):
        return "G" + "".join(str(e) for e in m)
    return "G_" + "_".join(str(e) for e in m)


def generic_G(ring: WeightedPolyRing, degree: int, extra_symbols: Sequence[str] = ()) -> Tuple[WeightedPolyRing, Polynomial]:
    """
    Ring over a parameter ring holding one symbol per monomial of weighted
    degree ``degree`` (plus ``extra_symbols``), and the generic G in it.
    """
    monomials = ring.monomials_of_degree(degree)
    symbols = list(extra_symbols) + [g_symbol(m) for m in monomials]
    base = ring.domain.base if isinstance(ring.domain, ParameterRing) else ring.domain
    params = ParameterRing(ring.p, symbols, base=base)
    pring = ring.with_domain(params)
    G = Polynomial(pring, {m: params.symbol(g_symbol(m)) for m in monomials})
    return pring, G


@dataclass(frozen=True)
class HypersurfacePresentation:
    """f + pG with f, G over the residue field k (or a parameter/batch ring over it)"""

    f: Polynomial
    G: Polynomial
    check_homogeneity: bool = True

    def __post_init__(self):
        if self.f.ring != self.G.ring:
            raise RingMismatchError("f and G must live in the same ring")
        domain = self.ring.domain
        if domain.p is None or domain.characteristic != domain.p:
            raise DomainError(f"Coefficients of a presentation need characteristic p, got {domain}")
        if self.f.is_zero():
            raise PresentationError("f must be nonzero")
        if not self.check_homogeneity:
            return
        for name, h in (("f", self.f), ("G", self.G)):
            report = h.weighted_degree_check()
            if not report.homogeneous:
                a, b = report.witness
                raise InhomogeneousError(
                    f"{name} is not weighted homogeneous",
                    (self.ring.monomial_text(a), self.ring.monomial_text(b)),
                )
        if not self.G.is_zero() and self.d_G != self.d_f:
            raise PresentationError(f"G has degree {self.d_G} but f has degree {self.d_f}")

    @property
    def ring(self) -> WeightedPolyRing:
        return self.f.ring

    @property
    def p(self) -> int:
        return self.ring.domain.p

    @property
    def d_f(self) -> Optional[int]:
        return self.f.weighted_degree_check().degree

    @property
    def d_G(self) -> Optional[int]:
        return self.G.weighted_degree_check().degree

    @property
    def f_coefficients(self) -> Dict[Monomial, object]:
        return dict(self.f.terms())

    @property
    def G_coefficients(self) -> Dict[Monomial, object]:
        return dict(self.G.terms())

    def with_G(self, G: Polynomial) -> "HypersurfacePresentation":
        return HypersurfacePresentation(self.f, G, self.check_homogeneity)

    @classmethod
    def from_witt_terms(
        cls,
        ring: WeightedPolyRing,
        terms: Mapping[Monomial, Tuple[object, object]],
        check_homogeneity: bool = True,
    ) -> "HypersurfacePresentation":
        """Presentation of sum (c, d) x^a with (c, d) in W_2(k): f-coefficient c, G-coefficient d^(1/p)"""
        domain = ring.domain
        f = Polynomial(ring, {ring.check_monomial(m): c for m, (c, _) in terms.items()})
        G = Polynomial(ring, {ring.check_monomial(m): pth_root(domain, d) for m, (_, d) in terms.items()})
        return cls(f, G, check_homogeneity)


class W2Poly:
    """A length-2 Witt vector (h0, h1) with polynomial entries in characteristic p"""

    __slots__ = ("h0", "h1")

    def __init__(self, h0: Polynomial, h1: Polynomial):
        if h0.ring != h1.ring:
            raise RingMismatchError("Both Witt coordinates must live in one ring")
        self.h0 = h0
        self.h1 = h1

    @property
    def ring(self) -> WeightedPolyRing:
        return self.h0.ring

    @property
    def p(self) -> int:
        return self.ring.domain.p

    @classmethod
    def zero(cls, ring: WeightedPolyRing) -> "W2Poly":
        return cls(ring.zero(), ring.zero())

    @classmethod
    def one(cls, ring: WeightedPolyRing) -> "W2Poly":
        return cls(ring.one(), ring.zero())

    def __eq__(self, other) -> bool:
        if not isinstance(other, W2Poly):
            return NotImplemented
        return self.h0 == other.h0 and self.h1 == other.h1

    __hash__ = None

    def add(self, other: "W2Poly", bound: Optional[int] = None) -> "W2Poly":
        h0 = (self.h0 + other.h0).truncate(bound)
        h1 = (self.h1 + other.h1 + carry(self.h0, other.h0, bound)).truncate(bound)
        return W2Poly(h0, h1)

    def multiply(self, other: "W2Poly", bound: Optional[int] = None) -> "W2Poly":
        h0 = self.h0.multiply(other.h0, bound=bound)
        h1 = self.h0.frobenius_twist().multiply(other.h1, bound=bound) + other.h0.frobenius_twist().multiply(
            self.h1, bound=bound
        )
        return W2Poly(h0, h1)

    def power(self, k: int, bound: Optional[int] = None) -> "W2Poly":
        if k < 0:
            raise DomainError("Witt powers must be non-negative")
        result = W2Poly.one(self.ring)
        base = self
        while k:
            if k & 1:
                result = result.multiply(base, bound)
            k >>= 1
            if k:
                base = base.multiply(base, bound)
        return result

    def __add__(self, other: "W2Poly") -> "W2Poly":
        return self.add(other)

    def __mul__(self, other: "W2Poly") -> "W2Poly":
        return self.multiply(other)

    def __neg__(self) -> "W2Poly":
        if self.p == 2:
            # N1 = -X1 - X0^2, and -1 = 1
            return W2Poly(self.h0, self.h1 + self.h0.frobenius_twist())
        return W2Poly(-self.h0, -self.h1)

    def __repr__(self) -> str:
        return f"W2Poly({self.h0.to_text()!r}, {self.h1.to_text()!r})"


def carry(a: Polynomial, b: Polynomial, bound: Optional[int] = None) -> Polynomial:
    """Second-coordinate carry of [a] + [b]: -sum_{0<i<p} (binom(p, i)/p) a^i b^(p-i)"""
    p = a.ring.domain.p
    ring = a.ring
    if a.is_zero() or b.is_zero():
        return ring.zero()
    a_pows = [ring.one(), a.truncate(bound)]
    b_pows = [ring.one(), b.truncate(bound)]
    for _ in range(2, p):
        a_pows.append(a_pows[-1].multiply(a, bound=bound))
        b_pows.append(b_pows[-1].multiply(b, bound=bound))
    total = ring.zero()
    for i in range(1, p):
        total = total + a_pows[i].multiply(b_pows[p - i], bound=bound) * (comb(p, i) // p)
    return -total


def _teichmuller_term(ring: WeightedPolyRing, m: Monomial, c) -> W2Poly:
    return W2Poly(Polynomial(ring, {m: c}), ring.zero())


def encode_w2_terms(ring: WeightedPolyRing, terms: Mapping[Monomial, Tuple[object, object]]) -> W2Poly:
    """Encode sum (c, d) x^a, (c, d) in W_2(k), as sum (c x^a, 0) + (0, d x^(pa))"""
    p = ring.domain.p
    acc = W2Poly.zero(ring)
    for m in sorted(terms, key=ring.order_key):
        acc = acc + _teichmuller_term(ring, ring.check_monomial(m), terms[m][0])
    # V-terms have zero first coordinate, so adding them never carries
    v_part = Polynomial(ring, {tuple(p * e for e in m): d for m, (_, d) in terms.items()})
    return W2Poly(acc.h0, acc.h1 + v_part)


def encode_w2(h: HypersurfacePresentation) -> W2Poly:
    ring = h.ring
    acc = W2Poly.zero(ring)
    for m, c in h.f.terms():
        acc = acc + _teichmuller_term(ring, m, c)
    return W2Poly(acc.h0, acc.h1 + h.G.frobenius_twist())


def classical_delta(fbar: Polynomial) -> Polynomial:
    """
    Carry of the Teichmueller sum of the terms of fbar, by direct multinomial
    expansion: -(1/p) * sum over p-element multisets of terms that are not a
    single term repeated.
    """
    ring = fbar.ring
    p = ring.domain.p
    terms = [Polynomial(ring, {m: c}) for m, c in fbar.terms()]
    total = ring.zero()
    for combo in combinations_with_replacement(range(len(terms)), p):
        counts = Counter(combo)
        if len(counts) == 1:
            continue
        multinomial = factorial(p)
        for k in counts.values():
            multinomial //= factorial(k)
        prod = ring.one()
        for i, k in counts.items():
            prod = prod * terms[i].power(k)
        total = total + prod * (multinomial // p)
    return -total


def delta1_power(h: HypersurfacePresentation, k: int, bound: Optional[int] = None) -> Polynomial:
    """Delta_1((f + pG)^k), optionally reduced modulo m^[bound]"""
    if k < 1:
        raise DomainError("delta1_power needs k >= 1")
    return encode_w2(h).power(k, bound).h1


def delta1_shortcut(h: HypersurfacePresentation) -> Polynomial:
    """Delta_1(f + pG) = Delta_cl(f) + G^p"""
    return classical_delta(h.f) + h.G.frobenius_twist()


def is_power_of(q: int, p: int) -> bool:
    if q < 1:
        return False
    while q % p == 0:
        q //= p
    return q == 1


def frobenius_power_membership(T: Polynomial, q: int) -> MembershipResult:
    p = T.ring.domain.p
    if p is None or not is_power_of(q, p) or q == 1:
        raise DomainError(f"{q} is not a positive power of p={p}")
    escaping = [m for m in T.raw_terms() if max(m, default=0) < q]
    if not escaping:
        return MembershipResult(q, True)
    return MembershipResult(q, False, min(escaping, key=T.ring.order_key))


def level_exponent(p: int, n: int) -> int:
    """e_n = 1 + p + ... + p^(n-2); e_1 = 0"""
    return sum(p ** i for i in range(n - 1))


def _check_bound(p: int, n: int):
    if p ** n > settings.EXPONENT_BOUND:
        raise LevelBoundError(f"p^n = {p ** n} exceeds the exponent bound {settings.EXPONENT_BOUND}")


def _level_record(n: int, p: int, T: Polynomial) -> LevelTest:
    q = p ** n
    result = frobenius_power_membership(T, q)
    exercised = n == 1 or (p, n) in EXERCISED_LEVELS
    if not exercised:
        logger.warning("Level %d at p=%d lies outside the range covered by worked examples", n, p)
    return LevelTest(n, level_exponent(p, n), q, T, result.member, result.witness, exercised)


def iter_level_tests(h: HypersurfacePresentation, D: Optional[Polynomial] = None) -> Iterator[LevelTest]:
    """Level tests 1, 2, 3, ... computed incrementally; D is computed on demand"""
    p = h.p
    base = h.f.power(p - 1)
    yield _level_record(1, p, base.truncate(p))
    if D is None:
        D = delta1_power(h, p - 1)
    E = h.ring.one()
    n = 1
    while True:
        n += 1
        _check_bound(p, n)
        q = p ** n
        E = E.frobenius_twist().multiply(D, bound=q)
        T = base.multiply(E, bound=q)
        logger.info("Level %d: %d terms in T mod m^[%d]", n, len(T), q)
        yield _level_record(n, p, T)


def level_test(h: HypersurfacePresentation, n: int) -> LevelTest:
    if n < 1:
        raise LevelBoundError("Levels start at 1")
    _check_bound(h.p, n)
    for test in iter_level_tests(h):
        if test.level == n:
            return test


def _certificate_from(level1: LevelTest, D: Polynomial, p: int) -> CertificateResult:
    if not level1.member:
        return CertificateResult(CertificateOutcome.INCONCLUSIVE, "f^(p-1) escapes m^[p]: the ring is F-split")
    result = frobenius_power_membership(D, p * p)
    if result.member:
        return CertificateResult(CertificateOutcome.CERTIFIED_INFINITE, f"Delta_1((f+pG)^{p - 1}) lies in m^[{p * p}]")
    return CertificateResult(
        CertificateOutcome.INCONCLUSIVE, f"Delta_1((f+pG)^{p - 1}) escapes m^[{p * p}]", result.witness
    )


def non_qfs_certificate(h: HypersurfacePresentation) -> CertificateResult:
    p = h.p
    level1 = next(iter_level_tests(h))
    return _certificate_from(level1, delta1_power(h, p - 1), p)


def max_admissible_level(p: int, requested: int) -> int:
    n = requested
    while n > 1 and p ** n > settings.EXPONENT_BOUND:
        n -= 1
    if n < requested:
        logger.warning("Level cutoff %d clamped to %d by the exponent bound %d", requested, n, settings.EXPONENT_BOUND)
    return n


def qfs_height(h: HypersurfacePresentation, max_level: Optional[int] = None) -> HeightVerdict:
    start = time.perf_counter()
    requested = max_level if max_level is not None else settings.MAX_LEVEL
    if requested < 1:
        raise LevelBoundError("The level cutoff must be at least 1")
    p = h.p
    cutoff = max_admissible_level(p, requested)
    levels: List[LevelTest] = [next(iter_level_tests(h))]

    def verdict(outcome, height=None, certificate=None):
        return HeightVerdict(outcome, height, cutoff, levels, certificate, time.perf_counter() - start)

    if not levels[0].member:
        return verdict(Outcome.HEIGHT, 1)
    D = delta1_power(h, p - 1)
    certificate = _certificate_from(levels[0], D, p)
    if certificate.outcome == CertificateOutcome.CERTIFIED_INFINITE:
        return verdict(Outcome.CERTIFIED_INFINITE, certificate=certificate)
    tests = iter_level_tests(h, D)
    next(tests)
    for _ in range(2, cutoff + 1):
        test = next(tests)
        levels.append(test)
        if not test.member:
            return verdict(Outcome.HEIGHT, test.level, certificate)
    return verdict(Outcome.EXCEEDS_CUTOFF, certificate=certificate)


# -- mixed-characteristic coefficients ----------------------------------


def witt_coordinates_mod_p2(c: int, p: int) -> Tuple[int, int]:
    """W_2(F_p) = Z/p^2: c = [c0] + p*[c1] with [c0] = c0^p mod p^2"""
    c0 = c % p
    c1 = ((c - pow(c0, p, p * p)) % (p * p)) // p
    return c0, c1


def witt_terms_from_lift(h: Polynomial, ring: WeightedPolyRing) -> Dict[Monomial, Tuple[int, int]]:
    """Witt coordinates of the coefficients of a polynomial over Z/p^2, for encode_w2_terms over F_p"""
    domain = h.ring.domain
    if not isinstance(domain, IntegersModPow) or domain.m != 2:
        raise DomainError("Witt coordinates need coefficients in Z/p^2")
    if not isinstance(ring.domain, PrimeField) or ring.domain.p != domain.p:
        raise DomainError("Target ring must be over F_p")
    p = domain.p
    out = {}
    for m, c in h.terms():
        c0, c1 = witt_coordinates_mod_p2(c, p)
        # p*[c1] = V[c1^p]; Frobenius is the identity on F_p
        out[m] = (c0, c1)
    return out


# -- batched evaluation -------------------------------------------------


def batch_level_survivors(h: HypersurfacePresentation, levels: int) -> np.ndarray:
    """Indices of the samples whose level tests 1..levels are all members"""
    domain = h.ring.domain
    if not isinstance(domain, BatchField):
        raise DomainError("batch_level_survivors needs a presentation over a BatchField")
    p = h.p
    index = np.arange(domain.size)
    base = h.f.power(p - 1)
    alive = membership_mask(base.truncate(p), p)
    index = index[alive]
    if levels == 1 or not len(index):
        return index
    D = delta1_power(h, p - 1, bound=p ** levels)
    base, D = take(base, np.nonzero(alive)[0]), take(D, np.nonzero(alive)[0])
    E = D.ring.one()
    for n in range(2, levels + 1):
        _check_bound(p, n)
        q = p ** n
        E = E.frobenius_twist().multiply(D, bound=q)
        mask = membership_mask(base.multiply(E, bound=q), q)
        keep = np.nonzero(mask)[0]
        index = index[keep]
        if not len(index):
            break
        base, D, E = take(base, keep), take(D, keep), take(E, keep)
    return index


def batch_certificate_mask(h: HypersurfacePresentation) -> np.ndarray:
    """Per-sample: level 1 is a member and Delta_1((f+pG)^(p-1)) lies in m^[p^2]"""
    domain = h.ring.domain
    if not isinstance(domain, BatchField):
        raise DomainError("batch_certificate_mask needs a presentation over a BatchField")
    p = h.p
    level1 = membership_mask(h.f.power(p - 1).truncate(p), p)
    D = delta1_power(h, p - 1, bound=p * p)
    return level1 & membership_mask(D, p * p)
