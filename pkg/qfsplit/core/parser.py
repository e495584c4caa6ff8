# qfsplit/core/parser.py
"""
Polynomial expression grammar.

    expr   := sum
    sum    := prod (('+' | '-') prod)*
    prod   := unary ('*' unary)*
    unary  := '-' unary | power
    power  := atom ('^' INTEGER)*
    atom   := INTEGER | IDENTIFIER | '(' expr ')'

Identifiers resolve to bound polynomials (e.g. ``f`` and ``G`` in proof
displays), then ring variables, then parameter symbols, then the generator
of an extension field. ``p`` is reserved. Whitespace, newlines
included, is insignificant.
"""
from dataclasses import dataclass
from typing import Mapping, Optional
import logging

import pyparsing as pp

from .exceptions import ExpressionSyntaxError, UnknownSymbolError
from .fields import ExtensionField, ParameterRing
from .polynomial import Polynomial, WeightedPolyRing

logger = logging.getLogger(__name__)

RESERVED = {"p"}

pp.ParserElement.enable_packrat()


@dataclass(frozen=True)
class _Token:
    text: str
    loc: int


def _token(s, loc, toks):
    return _Token(toks[0], loc)


def _build_grammar() -> pp.ParserElement:
    integer = pp.Word(pp.nums).set_name("integer").set_parse_action(_token)
    ident = pp.Word(pp.alphas + "_", pp.alphanums + "_").set_name("identifier").set_parse_action(_token)
    operand = integer | ident
    return pp.infix_notation(
        operand,
        [
            (pp.Literal("^"), 2, pp.OpAssoc.LEFT),
            (pp.Literal("-"), 1, pp.OpAssoc.RIGHT),
            (pp.Literal("*"), 2, pp.OpAssoc.LEFT),
            (pp.one_of("+ -"), 2, pp.OpAssoc.LEFT),
        ],
    )


_GRAMMAR = _build_grammar()


class _Evaluator:
    def __init__(self, text: str, ring: WeightedPolyRing, bindings: Optional[Mapping[str, Polynomial]] = None):
        self.text = text
        self.ring = ring
        self.bindings = dict(bindings or {})
        domain = ring.domain
        self.params: Optional[ParameterRing] = domain if isinstance(domain, ParameterRing) else None
        field = domain.base if isinstance(domain, ParameterRing) else domain
        self.field: Optional[ExtensionField] = field if isinstance(field, ExtensionField) else None

    def _where(self, loc: int):
        return pp.lineno(loc, self.text), pp.col(loc, self.text)

    def leaf(self, tok: _Token) -> Polynomial:
        ring = self.ring
        if tok.text.isdigit():
            return ring.constant(ring.domain.from_int(int(tok.text)))
        name = tok.text
        if name in RESERVED:
            line, col = self._where(tok.loc)
            raise ExpressionSyntaxError(f"'{name}' is reserved and cannot be used as an identifier", line, col)
        if name in self.bindings:
            return self.bindings[name]
        if name in ring.variables:
            return ring.variable(name)
        if self.params is not None and name in self.params.index:
            return ring.constant(self.params.symbol(name))
        if self.field is not None and name == self.field.generator:
            gen = self.field.gen
            if self.params is not None:
                return ring.constant(self.params.constant(gen))
            return ring.constant(gen)
        line, col = self._where(tok.loc)
        raise UnknownSymbolError(name, line, col)

    def exponent(self, node) -> int:
        if isinstance(node, _Token) and node.text.isdigit():
            return int(node.text)
        raise ExpressionSyntaxError("Exponents must be non-negative decimal integers", *self._first_where(node))

    def _first_where(self, node):
        while not isinstance(node, _Token):
            node = node[0]
        return self._where(node.loc)

    def evaluate(self, node) -> Polynomial:
        if isinstance(node, _Token):
            return self.leaf(node)
        items = list(node)
        if len(items) == 2 and items[0] == "-":
            return -self.evaluate(items[1])
        if len(items) == 1:
            return self.evaluate(items[0])
        ops = items[1::2]
        if all(op == "^" for op in ops):
            result = self.evaluate(items[0])
            for exp_node in items[2::2]:
                result = result.power(self.exponent(exp_node))
            return result
        result = self.evaluate(items[0])
        for op, rhs in zip(ops, items[2::2]):
            value = self.evaluate(rhs)
            if op == "*":
                result = result * value
            elif op == "+":
                result = result + value
            else:
                result = result - value
        return result


def parse_polynomial(text: str, ring: WeightedPolyRing, bindings: Optional[Mapping[str, Polynomial]] = None) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``; ``bindings`` names whole polynomials"""
    try:
        parsed = _GRAMMAR.parse_string(text, parse_all=True)
    except pp.ParseBaseException as e:
        raise ExpressionSyntaxError(f"Syntax error: {e.msg}", e.lineno, e.col) from None
    return _Evaluator(text, ring, bindings).evaluate(parsed[0])


def parse_parameter(text: str, params: ParameterRing):
    """Parse an expression in the parameter symbols alone"""
    ring = WeightedPolyRing((), (), params)
    return parse_polynomial(text, ring).coefficient(())
