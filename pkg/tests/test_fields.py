# tests/test_fields.py
import numpy as np
import pytest

from qfsplit.core.exceptions import ConstraintError, DomainError, UnknownSymbolError
from qfsplit.core.fields import (
    ExtensionField,
    Integers,
    IntegersModPow,
    ParameterRing,
    PrimeField,
    builtin_modulus,
    finite_field,
    is_irreducible,
    is_prime,
)


# ---------------------------------------------------------
# Prime and extension fields
# ---------------------------------------------------------
@pytest.mark.parametrize("n, expected", [(2, True), (3, True), (4, False), (5, True), (1, False), (9, False)])
def test_is_prime(n, expected):
    assert is_prime(n) is expected


def test_prime_field_rejects_composite():
    with pytest.raises(DomainError):
        PrimeField(4)


@pytest.mark.parametrize("p, e", [(2, 2), (2, 3), (2, 4), (2, 8), (3, 2), (3, 3)])
def test_extension_field_inverses(p, e):
    k = ExtensionField(p, e)
    assert k.order == p ** e
    for a in range(1, min(k.order, 64)):
        assert k.mul(a, k.inverse(a)) == 1


def test_gf4_generator_satisfies_its_modulus():
    k = ExtensionField(2, 2)
    assert k.modulus == (1, 1, 1)
    t = k.gen
    # t^2 + t + 1 = 0
    assert k.add(k.add(k.mul(t, t), t), k.one) == 0
    assert k.to_text(k.add(t, k.one)) == "t + 1"


def test_extension_field_distributivity_gf8():
    k = ExtensionField(2, 3)
    elements = list(k.elements())
    for a in elements:
        for b in elements:
            for c in elements:
                assert k.mul(a, k.add(b, c)) == k.add(k.mul(a, b), k.mul(a, c))


@pytest.mark.parametrize("p, e", [(2, 3), (3, 2)])
def test_pth_root_inverts_frobenius(p, e):
    k = ExtensionField(p, e)
    for a in k.elements():
        assert k.frobenius(k.pth_root(a)) == a


@pytest.mark.parametrize(
    "domain",
    [
        PrimeField(2),
        PrimeField(3),
        PrimeField(5),
        ExtensionField(2, 2),
        ExtensionField(2, 4),
        ExtensionField(3, 2),
        IntegersModPow(2, 2),
        IntegersModPow(3, 2),
        Integers(),
    ],
    ids=repr,
)
def test_ring_axioms_on_random_elements(domain):
    rng = np.random.default_rng(2024)
    add, mul = domain.add, domain.mul
    for _ in range(1000):
        a, b, c = (domain.random_element(rng) for _ in range(3))
        assert add(a, b) == add(b, a)
        assert mul(a, b) == mul(b, a)
        assert add(add(a, b), c) == add(a, add(b, c))
        assert mul(mul(a, b), c) == mul(a, mul(b, c))
        assert mul(a, add(b, c)) == add(mul(a, b), mul(a, c))
        assert add(a, domain.zero) == a
        assert mul(a, domain.one) == a
        assert domain.is_zero(add(a, domain.neg(a)))
        if hasattr(domain, "inverse") and not domain.is_zero(a):
            assert mul(a, domain.inverse(a)) == domain.one


def test_reducible_modulus_rejected():
    assert not is_irreducible((1, 0, 1), 2)
    with pytest.raises(DomainError):
        ExtensionField(2, 2, modulus=(1, 0, 1))


def test_builtin_modulus_is_irreducible():
    for e in range(2, 9):
        assert is_irreducible(builtin_modulus(2, e), 2)


def test_finite_field_dispatch():
    assert finite_field(3) == PrimeField(3)
    assert isinstance(finite_field(2, 4), ExtensionField)


def test_integers_mod_pow():
    z4 = IntegersModPow(2, 2)
    assert z4.modulus == 4
    assert z4.from_int(-1) == 3
    assert z4.mul(2, 2) == 0
    assert Integers().to_text(-3) == "-3"


# ---------------------------------------------------------
# Parameter rings
# ---------------------------------------------------------
def test_parameter_ring_arithmetic_char2():
    R = ParameterRing(2, ["a", "b"])
    a, b = R.symbol("a"), R.symbol("b")
    square = R.mul(R.add(a, b), R.add(a, b))
    # (a + b)^2 = a^2 + b^2 in characteristic 2
    assert R.eq(square, R.add(R.pow(a, 2), R.pow(b, 2)))
    assert R.eq(R.frobenius(R.add(a, b)), square)


def test_parameter_ring_specialize_and_substitute():
    k = ExtensionField(2, 2)
    R = ParameterRing(2, ["a"], base=k)
    a = R.symbol("a")
    element = R.mul(a, R.add(a, R.one))
    t = k.gen
    # t(t + 1) = t^2 + t = 1
    assert R.specialize(element, {"a": t}, k) == 1
    assert R.is_zero(R.substitute(element, {"a": R.one}))


def test_parameter_ring_specialize_needs_every_symbol():
    R = ParameterRing(2, ["a", "b"])
    with pytest.raises(ConstraintError):
        R.specialize(R.symbol("a"), {"a": 1}, PrimeField(2))


def test_parameter_ring_unknown_symbol():
    R = ParameterRing(3, ["a"])
    with pytest.raises(UnknownSymbolError):
        R.symbol("b")


def test_eliminate_clears_denominators():
    R = ParameterRing(2, ["u", "s"])
    u, s = R.symbol("u"), R.symbol("s")
    # u^2 + u with u := 1/s gives (1 + s)/s^2, cleared to 1 + s
    element = R.add(R.pow(u, 2), u)
    assert R.eq(R.eliminate(element, "u", R.one, s), R.add(R.one, s))


def test_parameter_ring_random_element_reproducible():
    R = ParameterRing(3, ["a", "b"])
    x = R.random_element(np.random.default_rng(5))
    y = R.random_element(np.random.default_rng(5))
    assert R.eq(x, y)
