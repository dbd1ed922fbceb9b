"""
Polynomial expression parsing and formatting.

Grammar (whitespace is ignored)::

    expr   := ['+' | '-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' ['-'] int)?
    base   := int | var | '(' expr ')' | '1' '/' var

``1/x`` is sugar for ``x^-1``; no other division is accepted. Negative
exponents are only defined for unit monomials.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import List, Sequence, Union

from plinear.exceptions import ExpressionSyntaxError, UndeclaredVariableError
from plinear.rings.laurent import CoefficientRing, LaurentPoly

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # "int", "name", "op" or "end"
    text: str
    offset: int


@dataclass(frozen=True)
class IntLiteral:
    value: int


@dataclass(frozen=True)
class Variable:
    index: int
    name: str


@dataclass(frozen=True)
class Negate:
    operand: "PolyExpr"


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: "PolyExpr"
    right: "PolyExpr"


@dataclass(frozen=True)
class Power:
    base: "PolyExpr"
    exponent: int
    offset: int


PolyExpr = Union[IntLiteral, Variable, Negate, BinaryOp, Power]


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        match = _TOKEN.match(text, pos)
        if match is None:
            break
        kind = match.lastgroup
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        pos = match.end()
    tokens.append(Token("end", "", len(text.rstrip())))
    return tokens


class ExpressionParser:
    """Recursive-descent parser producing a PolyExpr tree."""

    def __init__(self, text: str, variables: Sequence[str]):
        self.text = text
        self.variables = list(variables)
        self.tokens = tokenize(text)
        self.pos = 0

    def parse(self) -> PolyExpr:
        node = self._expr()
        token = self._peek()
        if token.kind != "end":
            self._fail(token)
        return node

    def _peek(self) -> Token:
        return self.tokens[self.pos]

    def _next(self) -> Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def _at(self, *ops: str) -> bool:
        token = self._peek()
        return token.kind == "op" and token.text in ops

    def _fail(self, token: Token, message: str = None):
        if message is None:
            message = (
                "unexpected end of input" if token.kind == "end" else f"unexpected {token.text!r}"
            )
        raise ExpressionSyntaxError(message, token.offset)

    def _expr(self) -> PolyExpr:
        negate = False
        if self._at("+", "-"):
            negate = self._next().text == "-"
        node = self._term()
        if negate:
            node = Negate(node)
        while self._at("+", "-"):
            op = self._next().text
            node = BinaryOp(op, node, self._term())
        return node

    def _term(self) -> PolyExpr:
        node = self._factor()
        while True:
            if self._at("*"):
                self._next()
                node = BinaryOp("*", node, self._factor())
            elif self._at("/"):
                self._fail(self._peek(), "division is only supported as 1/<variable>")
            else:
                return node

    def _factor(self) -> PolyExpr:
        node = self._base()
        if self._at("^"):
            caret = self._next()
            sign = 1
            if self._at("-"):
                self._next()
                sign = -1
            token = self._next()
            if token.kind != "int":
                self._fail(token, "expected an integer exponent")
            node = Power(node, sign * int(token.text), caret.offset)
        return node

    def _base(self) -> PolyExpr:
        token = self._next()
        if token.kind == "int":
            if token.text == "1" and self._at("/"):
                self._next()
                return Power(self._variable(self._next()), -1, token.offset)
            return IntLiteral(int(token.text))
        if token.kind == "name":
            return self._variable(token)
        if token.kind == "op" and token.text == "(":
            node = self._expr()
            closing = self._next()
            if not (closing.kind == "op" and closing.text == ")"):
                self._fail(closing, "expected ')'")
            return node
        self._fail(token)

    def _variable(self, token: Token) -> Variable:
        if token.kind != "name":
            self._fail(token, "expected a variable")
        if token.text not in self.variables:
            raise UndeclaredVariableError(f"undeclared variable {token.text!r}", token.offset)
        return Variable(self.variables.index(token.text), token.text)


def evaluate(node: PolyExpr, nvars: int) -> LaurentPoly:
    """Evaluate a PolyExpr tree to an integer Laurent polynomial."""
    if isinstance(node, IntLiteral):
        return LaurentPoly.constant(node.value, nvars)
    if isinstance(node, Variable):
        return LaurentPoly.variable(node.index, nvars)
    if isinstance(node, Negate):
        return -evaluate(node.operand, nvars)
    if isinstance(node, BinaryOp):
        left, right = evaluate(node.left, nvars), evaluate(node.right, nvars)
        if node.op == "+":
            return left + right
        if node.op == "-":
            return left - right
        return left * right
    if isinstance(node, Power):
        base = evaluate(node.base, nvars)
        try:
            return base.pow(node.exponent)
        except ValueError:
            raise ExpressionSyntaxError(
                "negative exponent requires a unit monomial", node.offset
            ) from None
    raise TypeError(f"Unknown expression node {node!r}")


def parse_poly(text: str, variables: Sequence[str]) -> LaurentPoly:
    """
    Parse a Laurent polynomial with integer coefficients.

    Args:
        text: Expression such as ``"x + 2 + x^-1"`` or ``"(x+y)*(1+1/y)"``
        variables: Ordered variable names; their order fixes the exponent layout

    Returns:
        The exact LaurentPoly over Z

    Raises:
        ExpressionSyntaxError: On malformed input (carries the offset)
        UndeclaredVariableError: On names not listed in ``variables``
    """
    if not variables:
        raise ValueError("At least one variable must be declared")
    return evaluate(ExpressionParser(text, variables).parse(), len(variables))


def format_poly(poly: LaurentPoly, variables: Sequence[str]) -> str:
    """Render an integer Laurent polynomial so that parse_poly reads it back."""
    if poly.ring is not CoefficientRing.INTEGER:
        raise ValueError("Only integer Laurent polynomials can be formatted")
    if len(variables) != poly.nvars:
        raise ValueError(f"Expected {poly.nvars} variable names, got {len(variables)}")
    if poly.is_zero():
        return "0"

    pieces = []
    for exp, coeff in reversed(list(poly.terms.items())):
        factors = []
        for name, e in zip(variables, exp):
            if e == 1:
                factors.append(name)
            elif e != 0:
                factors.append(f"{name}^{e}")
        magnitude = abs(coeff)
        if not factors:
            body = str(magnitude)
        elif magnitude == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(magnitude)] + factors)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)
