# qfsplit/core/batch.py
"""
Vectorised coefficient domain: one polynomial computation evaluates many
field-valued samples at once.

An element of ``BatchField(field, size)`` is a numpy vector of field-element
codes (the same ints ``PrimeField``/``ExtensionField`` use), one entry per
sample. A coefficient is dropped from a polynomial only when it vanishes for
every sample.
"""
import logging

import numpy as np

from .exceptions import DomainError
from .fields import CoefficientDomain, ExtensionField, PrimeField
from .polynomial import Polynomial

logger = logging.getLogger(__name__)


class BatchField(CoefficientDomain):
    def __init__(self, field: CoefficientDomain, size: int):
        if not isinstance(field, (PrimeField, ExtensionField)):
            raise DomainError(f"Batches need a finite field, got {field}")
        if size < 1:
            raise DomainError("Batch size must be positive")
        self.field = field
        self.size = int(size)
        self.p = field.p
        self.characteristic = field.p
        self.order = field.order
        if isinstance(field, ExtensionField):
            q = field.order
            self._digits = np.array(field._digits, dtype=np.int64)
            self._place = np.array([field.p ** i for i in range(field.e)], dtype=np.int64)
            log = np.zeros(q, dtype=np.int64)
            for v, i in field._log.items():
                log[v] = i
            self._log = log
            self._exp = np.array(field._exp, dtype=np.int64)

    def __repr__(self):
        return f"BatchField({self.field!r}, {self.size})"

    def __eq__(self, other):
        return isinstance(other, BatchField) and (other.field, other.size) == (self.field, self.size)

    def __hash__(self):
        return hash(("BatchField", self.field, self.size))

    def resized(self, size: int) -> "BatchField":
        return BatchField(self.field, size)

    def constant(self, c) -> np.ndarray:
        return np.full(self.size, c, dtype=np.int64)

    def from_int(self, n: int) -> np.ndarray:
        return self.constant(self.field.from_int(n))

    def is_zero(self, a) -> bool:
        return not a.any()

    def eq(self, a, b) -> bool:
        return bool(np.array_equal(a, b))

    def add(self, a, b):
        if isinstance(self.field, PrimeField):
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        return ((self._digits[a] + self._digits[b]) % self.p) @ self._place

    def neg(self, a):
        if isinstance(self.field, PrimeField):
            return (-a) % self.p
        if self.p == 2:
            return a
        return ((-self._digits[a]) % self.p) @ self._place

    def mul(self, a, b):
        if isinstance(self.field, PrimeField):
            return (a * b) % self.p
        prod = self._exp[self._log[a] + self._log[b]]
        return np.where((a == 0) | (b == 0), 0, prod)

    def pow(self, a, k: int):
        if k < 0:
            raise DomainError("Negative powers are not supported")
        if isinstance(self.field, PrimeField):
            result = np.ones_like(a)
            base = a % self.p
            while k:
                if k & 1:
                    result = (result * base) % self.p
                k >>= 1
                if k:
                    base = (base * base) % self.p
            return result
        if k == 0:
            return np.ones_like(a)
        q1 = self.order - 1
        return np.where(a == 0, 0, self._exp[(self._log[a] * k) % q1])

    def frobenius(self, a):
        if isinstance(self.field, PrimeField):
            return a
        return self.pow(a, self.p)

    def to_text(self, a) -> str:
        return "[" + ", ".join(self.field.to_text(int(v)) for v in a) + "]"


def broadcast(h: Polynomial, domain: BatchField) -> Polynomial:
    """Lift a polynomial over ``domain.field`` to constant batch coefficients"""
    if h.ring.domain != domain.field:
        raise DomainError(f"Cannot broadcast coefficients of {h.ring.domain} into {domain}")
    ring = h.ring.with_domain(domain)
    return h.map_coefficients(domain.constant, ring)


def take(h: Polynomial, index: np.ndarray) -> Polynomial:
    """Restrict a batch polynomial to the samples at ``index``"""
    domain = h.ring.domain
    if not isinstance(domain, BatchField):
        raise DomainError("take() needs a batch polynomial")
    ring = h.ring.with_domain(domain.resized(len(index)))
    return h.map_coefficients(lambda c: c[index], ring)


def membership_mask(T: Polynomial, q: int) -> np.ndarray:
    """Per-sample membership of T in m^[q]"""
    domain = T.ring.domain
    if not isinstance(domain, BatchField):
        raise DomainError("membership_mask() needs a batch polynomial")
    escaped = np.zeros(domain.size, dtype=bool)
    for m, c in T.raw_terms().items():
        if max(m, default=0) < q:
            escaped |= c != 0
    return ~escaped
