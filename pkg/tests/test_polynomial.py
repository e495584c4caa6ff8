# tests/test_polynomial.py
import numpy as np
import pytest
import sympy

from qfsplit.core.exceptions import DomainError, RingMismatchError
from qfsplit.core.fields import ExtensionField, Integers, ParameterRing, PrimeField
from qfsplit.core.polynomial import (
    Polynomial,
    WeightedPolyRing,
    coefficient_of,
    poly_arith,
    pth_root,
    restricted_product,
    specialize,
    substitute,
)


def ring_7a1(domain=None):
    return WeightedPolyRing(("x", "y", "z", "w"), (1, 1, 1, 2), domain or PrimeField(2))


def random_poly(ring, rng, terms=5, max_exp=3):
    acc = {}
    for _ in range(terms):
        m = tuple(int(e) for e in rng.integers(0, max_exp + 1, size=ring.nvars))
        acc[m] = ring.domain.add(acc.get(m, ring.domain.zero), ring.domain.random_element(rng))
    return Polynomial(ring, acc)


def to_sympy(h, symbols):
    expr = 0
    for m, c in h.terms():
        term = sympy.Integer(int(c))
        for s, e in zip(symbols, m):
            term *= s ** e
        expr += term
    return sympy.Poly(expr, *symbols, modulus=h.ring.domain.p)


# ---------------------------------------------------------
# Monomials and grading
# ---------------------------------------------------------
def test_g_space_of_7a1_has_22_monomials():
    assert len(ring_7a1().monomials_of_degree(4)) == 22


def test_g_space_of_degree_six_surfaces_has_23_monomials():
    ring = WeightedPolyRing(("x", "y", "z", "w"), (1, 1, 2, 3), PrimeField(2))
    monomials = ring.monomials_of_degree(6)
    assert len(monomials) == 23
    assert all(ring.degree(m) == 6 for m in monomials)


def test_weighted_degree_check_reports_witness():
    ring = ring_7a1()
    w, x = ring.variable("w"), ring.variable("x")
    report = (w * w + x).weighted_degree_check()
    assert not report.homogeneous
    assert {ring.monomial_text(m) for m in report.witness} == {"x", "w^2"}
    assert (w * w).weighted_degree_check().degree == 4
    assert ring.zero().weighted_degree_check().degree_free


def test_check_monomial_rejects_bad_vectors():
    ring = ring_7a1()
    with pytest.raises(RingMismatchError):
        ring.check_monomial((1, 2))
    with pytest.raises(DomainError):
        ring.check_monomial((1, -1, 0, 0))


# ---------------------------------------------------------
# Arithmetic against sympy
# ---------------------------------------------------------
@pytest.mark.parametrize("p", [2, 3, 5])
def test_product_matches_sympy(p):
    rng = np.random.default_rng(p)
    ring = WeightedPolyRing(("x", "y", "z"), (1, 1, 1), PrimeField(p))
    symbols = sympy.symbols("x y z")
    for _ in range(10):
        a, b = random_poly(ring, rng), random_poly(ring, rng)
        assert to_sympy(a * b, symbols) == to_sympy(a, symbols) * to_sympy(b, symbols)
        assert to_sympy(a + b, symbols) == to_sympy(a, symbols) + to_sympy(b, symbols)


def test_power_matches_sympy():
    rng = np.random.default_rng(11)
    ring = WeightedPolyRing(("x", "y"), (1, 2), PrimeField(3))
    symbols = sympy.symbols("x y")
    a = random_poly(ring, rng, terms=4)
    assert to_sympy(a.power(5), symbols) == to_sympy(a, symbols) ** 5


def test_truncated_product_equals_truncated_full_product():
    rng = np.random.default_rng(3)
    ring = ring_7a1()
    for _ in range(20):
        a, b = random_poly(ring, rng), random_poly(ring, rng)
        assert a.multiply(b, bound=4) == (a * b).truncate(4)


def test_frobenius_twist_is_pth_power():
    rng = np.random.default_rng(7)
    for p in (2, 3):
        ring = WeightedPolyRing(("x", "y"), (1, 1), ExtensionField(p, 2))
        a = random_poly(ring, rng)
        assert a.frobenius_twist() == a.power(p)


def test_restricted_product_matches_full_coefficient():
    rng = np.random.default_rng(4)
    ring = ring_7a1()
    a, b, c = (random_poly(ring, rng, terms=8) for _ in range(3))
    full = a * b * c
    for m in list(full.monomials())[:10]:
        assert restricted_product([a, b, c], m) == full.coefficient(m)


def test_exact_divide_rejects_remainder():
    ring = WeightedPolyRing(("x",), (1,), Integers())
    h = ring.variable("x") * 4 + ring.one() * 2
    assert h.exact_divide(2) == ring.variable("x") * 2 + ring.one()
    with pytest.raises(DomainError):
        h.exact_divide(4)


def test_mixed_rings_refuse_to_combine():
    a = ring_7a1().variable("x")
    b = ring_7a1(PrimeField(3)).variable("x")
    with pytest.raises(RingMismatchError):
        a + b


# ---------------------------------------------------------
# Parameters
# ---------------------------------------------------------
def test_specialize_and_substitute_commute():
    k = ExtensionField(2, 3)
    params = ParameterRing(2, ["a", "b"], base=k)
    ring = ring_7a1(params)
    a, b = params.symbol("a"), params.symbol("b")
    x, w = ring.variable("x"), ring.variable("w")
    h = x.scale(params.add(a, b)) * x + w.scale(params.mul(a, a))
    half = substitute(h, {"b": params.constant(k.gen)})
    values = {"a": k.element([1, 1]), "b": k.gen}
    assert specialize(half, values, k) == specialize(h, values, k)


def test_to_text_is_canonical():
    ring = ring_7a1()
    x, y, w = ring.variable("x"), ring.variable("y"), ring.variable("w")
    assert (w * w + x * y * x).to_text() == "x^2*y + w^2"
    assert ring.zero().to_text() == "0"


def test_module_level_operations():
    ring = ring_7a1(ExtensionField(2, 2))
    k = ring.domain
    x, w = ring.variable("x"), ring.variable("w")
    h = poly_arith("sum", x.scale(k.gen), w)
    assert poly_arith("power", h, 2) == poly_arith("product", h, h)
    assert poly_arith("negation", h) == h
    assert coefficient_of(h, (1, 0, 0, 0)) == k.gen
    assert coefficient_of(h, (0, 1, 0, 0)) == 0
    assert pth_root(k, k.mul(k.gen, k.gen)) == k.gen
    with pytest.raises(DomainError):
        poly_arith("quotient", h, h)
    with pytest.raises(DomainError):
        poly_arith("sum", h)
    with pytest.raises(DomainError):
        pth_root(Integers(), 4)
