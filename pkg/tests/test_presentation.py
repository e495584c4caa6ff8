# tests/test_presentation.py
import pytest

from qfsplit.core.exceptions import ExpressionSyntaxError, InhomogeneousError, PresentationError
from qfsplit.core.fields import ExtensionField, ParameterRing
from qfsplit.io.presentation import (
    describe_field,
    parse_presentation,
    parse_presentation_text,
    serialize_presentation,
)
from qfsplit.io.reports import render_json, write_atomic

SEVEN_A1 = """
p: 2
variables: {x: 1, y: 1, z: 1, w: 2}
f: "w^2 + x*y*z*(x + y + z)"
G: "(x*y + y*z + x*z)*w"
"""


# ---------------------------------------------------------
# Loading
# ---------------------------------------------------------
def test_load_7a1():
    h = parse_presentation_text(SEVEN_A1)
    assert h.p == 2
    assert h.ring.variables == ("x", "y", "z", "w")
    assert h.d_f == 4
    assert len(h.G) == 3


def test_missing_G_defaults_to_zero():
    h = parse_presentation_text("p: 3\nvariables: {x: 1, y: 1}\nf: x^3 + y^3\n")
    assert h.G.is_zero()


def test_extension_field_and_parameters():
    text = """
p: 2
variables: {x: 1, y: 1}
field: {degree: 2}
parameters: [a]
f: "a*x^2 + t*y^2 + x*y"
"""
    h = parse_presentation_text(text)
    params = h.ring.domain
    assert isinstance(params, ParameterRing)
    assert isinstance(params.base, ExtensionField)
    assert describe_field(h) == {"degree": 2, "generator": "t", "modulus": [1, 1, 1]}


def test_generic_G():
    h = parse_presentation_text(SEVEN_A1.replace('"(x*y + y*z + x*z)*w"', "generic"))
    assert len(h.G) == 22
    assert h.d_G == 4


def test_read_from_file(tmp_path):
    path = tmp_path / "7a1.yaml"
    path.write_text(SEVEN_A1, encoding="utf-8")
    assert parse_presentation(path).f == parse_presentation_text(SEVEN_A1).f
    with pytest.raises(PresentationError):
        parse_presentation(tmp_path / "missing.yaml")


# ---------------------------------------------------------
# Errors
# ---------------------------------------------------------
def test_unsupported_prime():
    with pytest.raises(PresentationError) as info:
        parse_presentation_text(SEVEN_A1.replace("p: 2", "p: 7"))
    assert "p" in info.value.detail


@pytest.mark.parametrize(
    "text",
    [
        "p: 2\nvariables: {}\nf: x\n",
        "p: 2\nvariables: {x: 0}\nf: x\n",
        "p: 2\nvariables: {p: 1}\nf: p\n",
        "p: 2\nvariables: {x: 1}\n",
        "[1, 2]",
        "p: [unclosed",
    ],
)
def test_invalid_documents(text):
    with pytest.raises(PresentationError):
        parse_presentation_text(text)


def test_inhomogeneous_f_names_two_terms():
    with pytest.raises(InhomogeneousError) as info:
        parse_presentation_text("p: 2\nvariables: {x: 1, w: 2}\nf: w^2 + x\n")
    assert set(info.value.witness) == {"x", "w^2"}


def test_negative_exponent_is_a_syntax_error():
    with pytest.raises(ExpressionSyntaxError):
        parse_presentation_text("p: 2\nvariables: {x: 1}\nf: x^-1\n")


def test_homogeneity_check_can_be_disabled():
    h = parse_presentation_text("p: 2\nvariables: {x: 1, w: 2}\nf: w^2 + x\ncheck_homogeneity: false\n")
    assert not h.check_homogeneity


# ---------------------------------------------------------
# Serialization
# ---------------------------------------------------------
@pytest.mark.parametrize(
    "text",
    [
        SEVEN_A1,
        "p: 3\nvariables: {x: 1, y: 1, z: 2, w: 3}\nf: w^2 + z^3 - x^2*y^2*(x + y)^2\n",
        "p: 2\nvariables: {x: 1, y: 1}\nfield: {degree: 3}\nparameters: [a]\nf: a*x^2 + (t^2 + 1)*y^2\n",
    ],
)
def test_serialization_is_stable(text):
    h = parse_presentation_text(text)
    canonical = serialize_presentation(h)
    again = parse_presentation_text(canonical)
    assert again.f == h.f
    assert again.G == h.G
    assert serialize_presentation(again) == canonical


def test_write_atomic_replaces_file(tmp_path):
    path = tmp_path / "out" / "report.txt"
    write_atomic(path, "one\n")
    write_atomic(path, "two\n")
    assert path.read_text(encoding="utf-8") == "two\n"
    assert [p.name for p in path.parent.iterdir()] == ["report.txt"]


def test_render_json_without_timing():
    from pydantic import BaseModel

    class Report(BaseModel):
        value: int
        elapsed: float = 1.5

    assert "elapsed" in render_json(Report(value=1))
    assert "elapsed" not in render_json(Report(value=1), timing=False)
