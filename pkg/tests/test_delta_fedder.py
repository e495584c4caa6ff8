# tests/test_delta_fedder.py
import numpy as np
import pytest

from qfsplit.core.batch import BatchField, broadcast
from qfsplit.core.delta_fedder import (
    HypersurfacePresentation,
    W2Poly,
    batch_certificate_mask,
    batch_level_survivors,
    carry,
    classical_delta,
    delta1_power,
    delta1_shortcut,
    encode_w2,
    encode_w2_terms,
    frobenius_power_membership,
    generic_G,
    level_exponent,
    level_test,
    max_admissible_level,
    non_qfs_certificate,
    qfs_height,
    witt_coordinates_mod_p2,
    witt_terms_from_lift,
)
from qfsplit.core.exceptions import (
    DomainError,
    InhomogeneousError,
    LevelBoundError,
    PresentationError,
    RingMismatchError,
)
from qfsplit.core.fields import ExtensionField, Integers, IntegersModPow, PrimeField
from qfsplit.core.parser import parse_polynomial
from qfsplit.core.polynomial import Polynomial, WeightedPolyRing
from qfsplit.core.witt import PolynomialAlgebra, WittElement, derive_table
from qfsplit.models.models import CertificateOutcome, Outcome


def presentation(variables, f, G="0", p=2):
    ring = WeightedPolyRing(tuple(variables), tuple(variables.values()), PrimeField(p))
    return HypersurfacePresentation(parse_polynomial(f, ring), parse_polynomial(G, ring))


def seven_a1(G="0"):
    return presentation({"x": 1, "y": 1, "z": 1, "w": 2}, "w^2 + x*y*z*(x + y + z)", G)


def random_homogeneous(ring, degree, rng, density=0.5):
    terms = {}
    for m in ring.monomials_of_degree(degree):
        if rng.random() < density:
            terms[m] = ring.domain.random_element(rng)
    return Polynomial(ring, terms)


# ---------------------------------------------------------
# Delta_1
# ---------------------------------------------------------
@pytest.mark.parametrize("p", [2, 3, 5])
def test_shortcut_agrees_with_witt_power(p):
    rng = np.random.default_rng(p)
    ring = WeightedPolyRing(("x", "y", "z"), (1, 1, 1), PrimeField(p))
    for _ in range(100):
        f = random_homogeneous(ring, 3, rng)
        if f.is_zero():
            continue
        G = random_homogeneous(ring, 3, rng)
        h = HypersurfacePresentation(f, G)
        assert delta1_shortcut(h) == delta1_power(h, 1)


def test_carry_of_two_terms_is_classical_delta():
    ring = WeightedPolyRing(("x", "y"), (1, 1), PrimeField(3))
    a = ring.monomial((2, 0))
    b = ring.monomial((1, 1), 2)
    assert carry(a, b) == classical_delta(a + b)


@pytest.mark.parametrize("p", [3, 5])
def test_square_of_lift_in_char_p(p):
    # (a0, a1)^2 = (a0^2, 2 a0^p a1) in W_2 of a ring of characteristic p
    rng = np.random.default_rng(40 + p)
    ring = WeightedPolyRing(("x", "y", "z"), (1, 1, 1), PrimeField(p))
    f = random_homogeneous(ring, 2, rng, density=1.0)
    G = random_homogeneous(ring, 2, rng, density=1.0)
    h = HypersurfacePresentation(f, G)
    assert delta1_power(h, 2) == f.power(p) * delta1_power(h, 1) * 2


def test_truncated_power_matches_full_power():
    h = seven_a1("(x*y + y*z + x*z)*w")
    assert delta1_power(h, 1, bound=4) == delta1_power(h, 1).truncate(4)


def test_encoding_from_witt_terms():
    k = ExtensionField(2, 2)
    ring = WeightedPolyRing(("x", "y"), (1, 1), k)
    terms = {(2, 0): (k.one, k.gen), (1, 1): (k.gen, 0), (0, 2): (k.one, k.one)}
    h = HypersurfacePresentation.from_witt_terms(ring, terms)
    assert h.G.coefficient((2, 0)) == k.pth_root(k.gen)
    assert encode_w2(h) == encode_w2_terms(ring, terms)


@pytest.mark.parametrize("c, expected", [(0, (0, 0)), (1, (1, 0)), (2, (0, 1)), (3, (1, 1))])
def test_witt_coordinates_mod_4(c, expected):
    assert witt_coordinates_mod_p2(c, 2) == expected


def test_delta1_power_needs_positive_exponent():
    with pytest.raises(DomainError):
        delta1_power(seven_a1(), 0)


# ---------------------------------------------------------
# Membership and levels
# ---------------------------------------------------------
def test_frobenius_power_membership():
    ring = WeightedPolyRing(("x", "y"), (1, 1), PrimeField(2))
    inside = ring.monomial((4, 1)) + ring.monomial((0, 5))
    assert frobenius_power_membership(inside, 4).member
    outside = inside + ring.monomial((3, 3))
    result = frobenius_power_membership(outside, 4)
    assert not result.member
    assert result.witness == (3, 3)
    with pytest.raises(DomainError):
        frobenius_power_membership(inside, 6)


@pytest.mark.parametrize("p, n, e", [(2, 1, 0), (2, 2, 1), (2, 3, 3), (3, 3, 4), (2, 4, 7)])
def test_level_exponent(p, n, e):
    assert level_exponent(p, n) == e


def test_level_bound():
    h = seven_a1()
    with pytest.raises(LevelBoundError):
        level_test(h, 0)
    with pytest.raises(LevelBoundError):
        level_test(h, 13)
    assert max_admissible_level(2, 20) == 12
    with pytest.raises(LevelBoundError):
        qfs_height(h, max_level=0)


def test_level_tests_reduce_modulo_frobenius_power():
    test = level_test(seven_a1(), 2)
    assert test.q == 4
    assert all(max(m) < 4 for m in test.test.monomials())


# ---------------------------------------------------------
# Heights
# ---------------------------------------------------------
def test_f_split_ring_has_height_one():
    verdict = qfs_height(presentation({"x": 1, "y": 1, "z": 1}, "x*y*z"))
    assert verdict.outcome == Outcome.HEIGHT
    assert verdict.height == 1
    assert len(verdict.levels) == 1


def test_7a1_heights():
    assert qfs_height(seven_a1()).height == 2
    verdict = qfs_height(seven_a1("(x*y + y*z + x*z)*w"))
    assert verdict.outcome == Outcome.HEIGHT
    assert verdict.height == 3
    assert [t.level for t in verdict.levels] == [1, 2, 3]
    assert verdict.certificate.outcome == CertificateOutcome.INCONCLUSIVE


def test_cutoff_below_height():
    verdict = qfs_height(seven_a1("(x*y + y*z + x*z)*w"), max_level=2)
    assert verdict.outcome == Outcome.EXCEEDS_CUTOFF
    assert verdict.describe() == "> 2"


def test_fermat_quintic_certificate():
    variables = {v: 1 for v in "xyzwuv"}
    h = presentation(variables, "x^5 + y^5 + z^5 + w^5 + u^5 + v^5")
    certificate = non_qfs_certificate(h)
    assert certificate.outcome == CertificateOutcome.CERTIFIED_INFINITE
    verdict = qfs_height(h)
    assert verdict.outcome == Outcome.CERTIFIED_INFINITE
    assert verdict.height is None


def test_fermat_quartic_certificate():
    h = presentation({v: 1 for v in "xyzwu"}, "x^4 + y^4 + z^4 + w^4 + u^4", p=3)
    assert qfs_height(h).outcome == Outcome.CERTIFIED_INFINITE


def test_certificate_inconclusive_when_f_split():
    certificate = non_qfs_certificate(presentation({"x": 1, "y": 1, "z": 1}, "x*y*z"))
    assert certificate.outcome == CertificateOutcome.INCONCLUSIVE


# ---------------------------------------------------------
# Presentations
# ---------------------------------------------------------
def test_presentation_validation():
    ring = WeightedPolyRing(("x", "y"), (1, 1), PrimeField(2))
    x, y = ring.variable("x"), ring.variable("y")
    with pytest.raises(PresentationError):
        HypersurfacePresentation(ring.zero(), ring.zero())
    with pytest.raises(PresentationError):
        HypersurfacePresentation(x * y, x)
    with pytest.raises(InhomogeneousError):
        HypersurfacePresentation(x * y + x, ring.zero())
    other = WeightedPolyRing(("x", "y"), (1, 1), PrimeField(3))
    with pytest.raises(RingMismatchError):
        HypersurfacePresentation(x * y, other.zero())
    integral = WeightedPolyRing(("x",), (1,), Integers())
    with pytest.raises(DomainError):
        HypersurfacePresentation(integral.variable("x"), integral.zero())


def test_generic_G_has_one_symbol_per_monomial():
    h = seven_a1()
    pring, G = generic_G(h.ring, 4)
    assert len(G) == 22
    assert "G1101" in pring.domain.index


# ---------------------------------------------------------
# Batched evaluation
# ---------------------------------------------------------
def test_batch_agrees_with_scalar_levels():
    h = seven_a1()
    monomials = h.ring.monomials_of_degree(4)
    rng = np.random.default_rng(17)
    codes = rng.integers(0, 2, size=(32, len(monomials)), dtype=np.int64)
    batch = BatchField(h.ring.domain, len(codes))
    ring = h.ring.with_domain(batch)
    G = Polynomial(ring, {m: np.ascontiguousarray(codes[:, j]) for j, m in enumerate(monomials)})
    hb = HypersurfacePresentation(broadcast(h.f, batch), G, check_homogeneity=False)

    survivors = set(int(i) for i in batch_level_survivors(hb, 2))
    certified = batch_certificate_mask(hb)
    for i, row in enumerate(codes):
        scalar = h.with_G(Polynomial(h.ring, {m: int(c) for m, c in zip(monomials, row)}))
        expected = level_test(scalar, 1).member and level_test(scalar, 2).member
        assert (i in survivors) == expected
        assert bool(certified[i]) == (non_qfs_certificate(scalar).outcome == CertificateOutcome.CERTIFIED_INFINITE)


def test_batch_helpers_need_a_batch_field():
    with pytest.raises(DomainError):
        batch_level_survivors(seven_a1(), 2)


def test_lift_over_z4_gives_witt_terms():
    lifted = WeightedPolyRing(("x", "y"), (1, 1), IntegersModPow(2, 2))
    ring = lifted.with_domain(PrimeField(2))
    terms = witt_terms_from_lift(Polynomial(lifted, {(2, 0): 1, (1, 1): 3}), ring)
    assert terms == {(2, 0): (1, 0), (1, 1): (1, 1)}
    h = HypersurfacePresentation.from_witt_terms(ring, terms)
    assert h.f == ring.monomial((2, 0)) + ring.monomial((1, 1))
    assert h.G == ring.monomial((1, 1))
    with pytest.raises(DomainError):
        witt_terms_from_lift(h.f, ring)


@pytest.mark.parametrize("p", [2, 3])
def test_w2_polynomials_agree_with_universal_table(p):
    ring = WeightedPolyRing(("x", "y"), (1, 1), PrimeField(p))
    algebra = PolynomialAlgebra(ring, p ** 3)
    table = derive_table(p, 2)
    x, y = ring.variable("x"), ring.variable("y")
    a0, a1, b0, b1 = x * x + y, x * y, x + y * y, y.power(3)
    a, b = WittElement(table, algebra, [a0, a1]), WittElement(table, algebra, [b0, b1])
    bound = algebra.bound
    product = W2Poly(a0, a1).multiply(W2Poly(b0, b1), bound)
    total = W2Poly(a0, a1).add(W2Poly(b0, b1), bound)
    assert (a * b).coords == (product.h0, product.h1)
    assert (a + b).coords == (total.h0, total.h1)


@pytest.mark.parametrize("p", [2, 3])
def test_encoding_of_lifts_is_a_ring_homomorphism(p):
    lifted = WeightedPolyRing(("x", "y"), (1, 1), IntegersModPow(p, 2))
    ring = lifted.with_domain(PrimeField(p))

    def encode(H):
        return encode_w2_terms(ring, witt_terms_from_lift(H, ring))

    rng = np.random.default_rng(500 + p)
    for _ in range(200):
        A = random_homogeneous(lifted, 2, rng, density=0.7)
        B = random_homogeneous(lifted, 2, rng, density=0.7)
        assert encode(A + B) == encode(A).add(encode(B))
        assert encode(A * B) == encode(A).multiply(encode(B))
