# qfsplit/core/fields.py
"""
Coefficient domains for sparse polynomial arithmetic.

Every domain works on plain hashable Python values so that polynomials can
key and compare coefficients directly:

* ``PrimeField``       -- ints in ``0..p-1``
* ``ExtensionField``   -- ints in ``0..p^e-1`` whose base-p digits are the
                          coefficients of the generator powers
* ``IntegersModPow``   -- ints in ``0..p^m-1``
* ``Integers``         -- Python ints (arbitrary precision)
* ``ParameterRing``    -- sorted tuples of ``(exponents, coefficient)`` pairs,
                          i.e. sparse polynomials in named parameters
"""
from abc import ABC, abstractmethod
from functools import lru_cache
from itertools import product
from typing import Dict, Iterator, List, Mapping, Optional, Sequence, Tuple
import logging

from .exceptions import ConstraintError, DomainError, UnknownSymbolError

logger = logging.getLogger(__name__)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


class CoefficientDomain(ABC):
    """Commutative ring of coefficients"""

    p: Optional[int] = None
    characteristic: int = 0

    @property
    def zero(self):
        return self.from_int(0)

    @property
    def one(self):
        return self.from_int(1)

    @abstractmethod
    def from_int(self, n: int):
        ...

    @abstractmethod
    def add(self, a, b):
        ...

    @abstractmethod
    def neg(self, a):
        ...

    @abstractmethod
    def mul(self, a, b):
        ...

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def eq(self, a, b) -> bool:
        return a == b

    def pow(self, a, k: int):
        if k < 0:
            raise DomainError("Negative powers are not supported")
        result = self.one
        base = a
        while k:
            if k & 1:
                result = self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        return result

    def frobenius(self, a):
        """a -> a^p; only in characteristic p"""
        if self.p is None or self.characteristic != self.p:
            raise DomainError(f"{self} does not have prime characteristic")
        return self.pow(a, self.p)

    def pth_root(self, a):
        raise DomainError(f"p-th roots are not available in {self}")

    def is_negative(self, a) -> bool:
        return False

    @abstractmethod
    def to_text(self, a) -> str:
        ...

    def random_element(self, rng):
        raise DomainError(f"Random sampling is not available in {self}")


class PrimeField(CoefficientDomain):
    def __init__(self, p: int):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        self.p = p
        self.characteristic = p
        self.order = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    def from_int(self, n: int) -> int:
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def pow(self, a, k: int):
        if k < 0:
            raise DomainError("Negative powers are not supported")
        return pow(a, k, self.p)

    def frobenius(self, a):
        return a

    def pth_root(self, a):
        # Frobenius is the identity on F_p
        return a

    def inverse(self, a):
        if a == 0:
            raise DomainError("Zero is not invertible")
        return pow(a, self.p - 2, self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def to_text(self, a) -> str:
        return str(a)

    def random_element(self, rng):
        return int(rng.integers(0, self.p))


def _poly_rem(num: List[int], den: Sequence[int], p: int) -> List[int]:
    """Remainder of coefficient lists (low -> high) over F_p; den monic"""
    num = [c % p for c in num]
    d = len(den) - 1
    while num and num[-1] == 0:
        num.pop()
    while len(num) - 1 >= d:
        lead = num[-1]
        shift = len(num) - 1 - d
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - lead * c) % p
        while num and num[-1] == 0:
            num.pop()
    return num


def is_irreducible(modulus: Sequence[int], p: int) -> bool:
    """Exhaustive factor check; modulus is monic, low -> high"""
    e = len(modulus) - 1
    if e < 1 or modulus[-1] % p != 1:
        return False
    for d in range(1, e // 2 + 1):
        for lower in product(range(p), repeat=d):
            if not any(_poly_rem(modulus, list(lower) + [1], p)):
                return False
    return True


@lru_cache(maxsize=None)
def builtin_modulus(p: int, e: int) -> Tuple[int, ...]:
    """Smallest monic irreducible of degree e (lower coefficients read as a base-p number)"""
    if p not in (2, 3) or not 2 <= e <= 8:
        raise DomainError(f"No built-in modulus for p={p}, e={e}; supply one explicitly")
    for code in range(p ** e):
        lower = [(code // p ** i) % p for i in range(e)]
        candidate = tuple(lower) + (1,)
        if lower[0] != 0 and is_irreducible(candidate, p):
            return candidate
    raise DomainError(f"No irreducible polynomial of degree {e} over F_{p}")


class ExtensionField(CoefficientDomain):
    def __init__(self, p: int, e: int, modulus: Optional[Sequence[int]] = None, generator: str = "t"):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        if e < 2:
            raise DomainError("Extension degree must be at least 2; use PrimeField for e = 1")
        if modulus is None:
            modulus = builtin_modulus(p, e)
        else:
            modulus = tuple(c % p for c in modulus)
            if len(modulus) != e + 1 or not is_irreducible(modulus, p):
                raise DomainError(f"Modulus {modulus} is not an irreducible polynomial of degree {e} over F_{p}")
        self.p = p
        self.e = e
        self.characteristic = p
        self.order = p ** e
        self.modulus = tuple(modulus)
        self.generator = generator
        self._digits = [tuple((code // p ** i) % p for i in range(e)) for code in range(self.order)]
        self._build_tables()

    def __repr__(self):
        return f"ExtensionField({self.p}, {self.e}, modulus={self.modulus})"

    def __eq__(self, other):
        return isinstance(other, ExtensionField) and (other.p, other.e, other.modulus) == (self.p, self.e, self.modulus)

    def __hash__(self):
        return hash(("ExtensionField", self.p, self.e, self.modulus))

    def _encode(self, digits: Sequence[int]) -> int:
        code = 0
        for i, d in enumerate(digits):
            code += (d % self.p) * self.p ** i
        return code

    def _mul_slow(self, a: int, b: int) -> int:
        da, db = self._digits[a], self._digits[b]
        prod = [0] * (2 * self.e - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % self.p
        rem = _poly_rem(prod, self.modulus, self.p)
        return self._encode(rem + [0] * (self.e - len(rem)))

    def _build_tables(self):
        q = self.order
        for g in range(2, q):
            exp = [1]
            x = g
            while x != 1 and len(exp) < q:
                exp.append(x)
                x = self._mul_slow(x, g)
            if len(exp) == q - 1:
                self.primitive = g
                self._exp = exp + exp
                self._log = {v: i for i, v in enumerate(exp)}
                return
        raise DomainError(f"No primitive element found in {self}")

    def from_int(self, n: int) -> int:
        return n % self.p

    def element(self, digits: Sequence[int]) -> int:
        """Element sum(digits[i] * t^i) reduced modulo the modulus"""
        rem = _poly_rem(list(digits), self.modulus, self.p)
        return self._encode(rem + [0] * (self.e - len(rem)))

    @property
    def gen(self) -> int:
        return self.element([0, 1])

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        return self._encode([x + y for x, y in zip(self._digits[a], self._digits[b])])

    def neg(self, a):
        if self.p == 2:
            return a
        return self._encode([-x for x in self._digits[a]])

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def pow(self, a, k: int):
        if k < 0:
            raise DomainError("Negative powers are not supported")
        if k == 0:
            return 1
        if a == 0:
            return 0
        return self._exp[(self._log[a] * k) % (self.order - 1)]

    def inverse(self, a):
        if a == 0:
            raise DomainError("Zero is not invertible")
        return self._exp[(-self._log[a]) % (self.order - 1)]

    def pth_root(self, a):
        # Frobenius has order e, so its inverse is a -> a^(p^(e-1))
        return self.pow(a, self.p ** (self.e - 1))

    def elements(self) -> Iterator[int]:
        return iter(range(self.order))

    def to_text(self, a) -> str:
        parts = []
        for i in range(self.e - 1, -1, -1):
            d = self._digits[a][i]
            if not d:
                continue
            if i == 0:
                parts.append(str(d))
            else:
                mono = self.generator if i == 1 else f"{self.generator}^{i}"
                parts.append(mono if d == 1 else f"{d}*{mono}")
        return " + ".join(parts) if parts else "0"

    def random_element(self, rng):
        return int(rng.integers(0, self.order))


def finite_field(p: int, e: int = 1, modulus: Optional[Sequence[int]] = None, generator: str = "t") -> CoefficientDomain:
    if e == 1:
        return PrimeField(p)
    return ExtensionField(p, e, modulus=modulus, generator=generator)


class IntegersModPow(CoefficientDomain):
    def __init__(self, p: int, m: int):
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        if m < 1:
            raise DomainError("Exponent m must be positive")
        self.p = p
        self.m = m
        self.modulus = p ** m
        self.characteristic = self.modulus

    def __repr__(self):
        return f"IntegersModPow({self.p}, {self.m})"

    def __eq__(self, other):
        return isinstance(other, IntegersModPow) and (other.p, other.m) == (self.p, self.m)

    def __hash__(self):
        return hash(("IntegersModPow", self.p, self.m))

    def from_int(self, n: int) -> int:
        return n % self.modulus

    def add(self, a, b):
        return (a + b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def pow(self, a, k: int):
        if k < 0:
            raise DomainError("Negative powers are not supported")
        return pow(a, k, self.modulus)

    def to_text(self, a) -> str:
        return str(a)

    def random_element(self, rng):
        return int(rng.integers(0, self.modulus))


class Integers(CoefficientDomain):
    characteristic = 0

    def __repr__(self):
        return "Integers()"

    def __eq__(self, other):
        return isinstance(other, Integers)

    def __hash__(self):
        return hash("Integers")

    def from_int(self, n: int) -> int:
        return int(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def pow(self, a, k: int):
        if k < 0:
            raise DomainError("Negative powers are not supported")
        return a ** k

    def is_negative(self, a) -> bool:
        return a < 0

    def to_text(self, a) -> str:
        return str(a)

    def random_element(self, rng, bound: int = 50):
        return int(rng.integers(-bound, bound + 1))


ParamElement = Tuple[Tuple[Tuple[int, ...], object], ...]


class ParameterRing(CoefficientDomain):
    """Polynomials in named parameters over a finite field of characteristic p"""

    def __init__(self, p: int, symbols: Sequence[str], base: Optional[CoefficientDomain] = None):
        if len(set(symbols)) != len(symbols):
            raise DomainError("Parameter symbols must be distinct")
        self.base = base if base is not None else PrimeField(p)
        if self.base.p != p or not isinstance(self.base, (PrimeField, ExtensionField)):
            raise DomainError(f"Base of a parameter ring must be a finite field of characteristic {p}")
        self.p = p
        self.characteristic = p
        self.symbols = tuple(symbols)
        self.index = {s: i for i, s in enumerate(self.symbols)}

    def __repr__(self):
        return f"ParameterRing({self.p}, {list(self.symbols)}, base={self.base!r})"

    def __eq__(self, other):
        return isinstance(other, ParameterRing) and (other.symbols, other.base) == (self.symbols, self.base)

    def __hash__(self):
        return hash(("ParameterRing", self.symbols, self.base))

    def _canonical(self, terms: Mapping[Tuple[int, ...], object]) -> ParamElement:
        base = self.base
        return tuple(sorted((m, c) for m, c in terms.items() if not base.is_zero(c)))

    def constant(self, c) -> ParamElement:
        if self.base.is_zero(c):
            return ()
        return (((0,) * len(self.symbols), c),)

    def from_int(self, n: int) -> ParamElement:
        return self.constant(self.base.from_int(n))

    def symbol(self, name: str) -> ParamElement:
        if name not in self.index:
            raise UnknownSymbolError(name)
        exps = [0] * len(self.symbols)
        exps[self.index[name]] = 1
        return ((tuple(exps), self.base.one),)

    def is_zero(self, a) -> bool:
        return len(a) == 0

    def add(self, a, b):
        if not a:
            return b
        if not b:
            return a
        acc = dict(a)
        base = self.base
        for m, c in b:
            acc[m] = base.add(acc[m], c) if m in acc else c
        return self._canonical(acc)

    def neg(self, a):
        return tuple((m, self.base.neg(c)) for m, c in a)

    def mul(self, a, b):
        if not a or not b:
            return ()
        base = self.base
        acc: Dict[Tuple[int, ...], object] = {}
        for ma, ca in a:
            for mb, cb in b:
                m = tuple(x + y for x, y in zip(ma, mb))
                c = base.mul(ca, cb)
                acc[m] = base.add(acc[m], c) if m in acc else c
        return self._canonical(acc)

    def frobenius(self, a):
        p = self.p
        return tuple((tuple(x * p for x in m), self.base.frobenius(c)) for m, c in a)

    def degree_in(self, a, name: str) -> int:
        i = self.index[name]
        return max((m[i] for m, _ in a), default=0)

    def _evaluate(self, a, values: Sequence, target: CoefficientDomain, embed):
        total = target.zero
        for m, c in a:
            term = embed(c)
            for v, k in zip(values, m):
                if k:
                    term = target.mul(term, target.pow(v, k))
            total = target.add(total, term)
        return total

    def specialize(self, a, assignment: Mapping[str, object], target: CoefficientDomain):
        """Evaluate at field elements of ``target`` (same characteristic)"""
        if target.characteristic != self.p:
            raise DomainError(f"Target {target} does not have characteristic {self.p}")
        missing = [s for s in self.symbols if s not in assignment]
        if missing:
            raise ConstraintError(f"Assignment misses parameter(s) {', '.join(missing)}")
        values = [assignment[s] for s in self.symbols]
        return self._evaluate(a, values, target, lambda c: self.embed_base(c, target))

    def embed_base(self, c, target: CoefficientDomain):
        if isinstance(self.base, PrimeField):
            return target.from_int(c)
        if target == self.base:
            return c
        raise DomainError(f"Cannot embed coefficients of {self.base} into {target}")

    def substitute(self, a, assignment: Mapping[str, ParamElement]):
        """Partial specialisation: replace some symbols by ring elements"""
        for s in assignment:
            if s not in self.index:
                raise UnknownSymbolError(s)
        values = [assignment.get(s, self.symbol(s)) for s in self.symbols]
        return self._evaluate(a, values, self, self.constant)

    def eliminate(self, a, name: str, numerator: ParamElement, denominator: ParamElement):
        """denominator^d * a(name := numerator / denominator), d the degree of a in name"""
        i = self.index[name]
        d = self.degree_in(a, name)
        total = ()
        for m, c in a:
            k = m[i]
            rest = list(m)
            rest[i] = 0
            term = ((tuple(rest), c),)
            term = self.mul(term, self.pow(numerator, k))
            term = self.mul(term, self.pow(denominator, d - k))
            total = self.add(total, term)
        return total

    def to_text(self, a) -> str:
        if not a:
            return "0"
        parts = []
        for m, c in sorted(a, key=lambda t: (sum(t[0]), t[0])):
            factors = [s if k == 1 else f"{s}^{k}" for s, k in zip(self.symbols, m) if k]
            ctext = self.base.to_text(c)
            if " " in ctext:
                ctext = f"({ctext})"
            if not factors:
                parts.append(ctext)
            elif c == self.base.one:
                parts.append("*".join(factors))
            else:
                parts.append("*".join([ctext] + factors))
        return " + ".join(parts)

    def random_element(self, rng, terms: int = 3, max_exp: int = 2):
        acc = {}
        for _ in range(terms):
            m = tuple(int(rng.integers(0, max_exp + 1)) for _ in self.symbols)
            c = self.base.random_element(rng)
            acc[m] = self.base.add(acc.get(m, self.base.zero), c)
        return self._canonical(acc)
