# qfsplit/catalog/identities.py
"""
Symbolic checks of the coefficient identities behind the catalog heights.

Each check computes a coefficient (or a whole residue modulo a Frobenius
power of the maximal ideal) of

    f^(p-1) * Delta_1((f + pG)^(p-1))^(1 + p + ... + p^(n-2))

over a parameter ring holding one symbol per coefficient of G, applies the
hypotheses the argument has already derived, and compares with the
displayed expression exactly. Eliminations replace a symbol by a fraction
and clear the denominator, so the comparison stays polynomial.
"""
from typing import List, Optional
import logging

from ..core.delta_fedder import HypersurfacePresentation, delta1_power, iter_level_tests
from ..core.exceptions import PresentationError
from ..core.fields import CoefficientDomain, ParameterRing
from ..core.parser import parse_parameter, parse_polynomial
from ..core.polynomial import Polynomial, restricted_product, substitute
from ..models.models import CheckKind, IdentityCheck
from .instances import CatalogInstance, IdentitySpec, get_instance, identity_ring, parse_field_element, translation_mismatches

logger = logging.getLogger(__name__)


def _parse_constant(text: str, domain: CoefficientDomain):
    if isinstance(domain, ParameterRing):
        return parse_parameter(text, domain)
    return parse_field_element(text, domain)


def _level_factors(h: HypersurfacePresentation, level: int) -> List[Polynomial]:
    """f^(p-1) D^(e_n) as a factor list; D^(p^j) is the j-th Frobenius twist of D"""
    p = h.p
    D = delta1_power(h, p - 1)
    factors = [h.f] * (p - 1)
    twisted = D
    for _ in range(level - 1):
        factors.append(twisted)
        twisted = twisted.frobenius_twist()
    return factors


def _level_residue(h: HypersurfacePresentation, level: int) -> Polynomial:
    for test in iter_level_tests(h):
        if test.level == level:
            return test.test


def check_identity(instance: CatalogInstance, spec: IdentitySpec) -> IdentityCheck:
    field = instance.field(1)
    f, G = identity_ring(instance, field, spec.G)
    ring = f.ring
    domain = ring.domain
    if (spec.hypotheses or spec.eliminations) and not isinstance(domain, ParameterRing):
        raise PresentationError(f"{instance.id} / {spec.name}: hypotheses need symbolic coefficients")
    hypotheses = {s: parse_parameter(t, domain) for s, t in spec.hypotheses.items()}
    if hypotheses:
        f, G = substitute(f, hypotheses), substitute(G, hypotheses)
    h = HypersurfacePresentation(f, G)
    p = h.p
    bindings = {"f": f, "G": G}

    if spec.kind == CheckKind.COEFFICIENT:
        target = ring.check_monomial(spec.target)
        computed = restricted_product(_level_factors(h, spec.level), target)
        expected = _parse_constant(spec.expected, domain)
        if hypotheses:
            expected = domain.substitute(expected, hypotheses)
        diff = domain.sub(computed, expected)
        for e in spec.eliminations:
            diff = domain.eliminate(
                diff, e.symbol, parse_parameter(e.numerator, domain), parse_parameter(e.denominator, domain)
            )
        passed = domain.is_zero(diff)
        computed_text, expected_text = domain.to_text(computed), domain.to_text(expected)
    else:
        target = None
        if spec.object == "delta":
            q = spec.modulus
            value = delta1_power(h, spec.power or p - 1, bound=q)
            bindings["D"] = delta1_power(h, 1, bound=q)
        else:
            q = spec.modulus or p ** spec.level
            value = _level_residue(h, spec.level).truncate(q)
        expected = parse_polynomial(spec.expected, ring, bindings)
        if hypotheses:
            expected = substitute(expected, hypotheses)
        diff = (value - expected).truncate(q)
        for e in spec.eliminations:
            num, den = parse_parameter(e.numerator, domain), parse_parameter(e.denominator, domain)
            diff = diff.map_coefficients(lambda c: domain.eliminate(c, e.symbol, num, den))
        passed = diff.is_zero()
        computed_text, expected_text = value.to_text(), expected.truncate(q).to_text()

    check = IdentityCheck(
        instance=instance.id,
        name=spec.name,
        kind=spec.kind,
        target=target,
        expected=expected_text,
        computed=computed_text,
        passed=passed,
        note=spec.note,
    )
    if passed:
        logger.info("%s / %s: identity holds", instance.id, spec.name)
    else:
        logger.error("%s / %s: expected %s, computed %s", instance.id, spec.name, expected_text, computed_text)
    return check


def translation_check(instance: CatalogInstance, samples: int = 20, seed: int = 0) -> Optional[IdentityCheck]:
    if instance.symbolic is None:
        return None
    bad = translation_mismatches(instance, samples, seed)
    shown = ", ".join(f"{s} = {text}" for s, text in instance.symbolic.substitution.items())
    return IdentityCheck(
        instance=instance.id,
        name="symbolic coefficients",
        kind=CheckKind.RESIDUE,
        target=None,
        expected=instance.f,
        computed=instance.symbolic.f,
        passed=not bad,
        note=f"{shown}; {samples} random points, {len(bad)} disagreements",
    )


def proof_identity_check(instance_id: str, names: Optional[List[str]] = None) -> List[IdentityCheck]:
    instance = get_instance(instance_id)
    checks = []
    translation = translation_check(instance)
    if translation is not None:
        checks.append(translation)
    for spec in instance.identities:
        if names and spec.name not in names:
            continue
        checks.append(check_identity(instance, spec))
    return checks
