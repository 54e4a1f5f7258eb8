"""
Reading and printing of Newton systems.

A system is given either as the equation of ẏ,

    y' = -x - x^3*y^2

with rational literals (integers, fractions and exactly converted decimals),
the operators ``+ - * / ^`` (``**`` is accepted for ``^``) and parentheses,
or in coefficient form as a JSON list of the coefficient lists of P₀, P₁,
... in increasing powers of x, e.g. ``[[0, -1], [], [0, 0, 0, -1]]``.
"""
import json
import re
from decimal import Decimal, InvalidOperation
from typing import Iterator, List, NamedTuple, Optional

import sympy
from sympy import Poly

from newton_centers.cli import messages
from newton_centers.monodromy.newton_system import Y, NewtonSystem
from newton_centers.polyarith.rat_poly import X
from newton_centers.utils.exceptions import (
    InputError,
    InvalidParameterError,
    SystemSyntaxError,
)
from newton_centers.utils.rational import to_rational

#: Accepted left-hand sides of the equation form.
LHS_PATTERN = re.compile(r"^\s*(?:y'|ydot|dy/dt)\s*=")

TOKEN_PATTERN = re.compile(
    r"(?P<space>\s+)"
    r"|(?P<number>\d+\.?\d*|\.\d+)"
    r"|(?P<name>[A-Za-z_]\w*)"
    r"|(?P<op>\*\*|[-+*/^()])"
)

#: Left binding powers of the infix operators.
BINDING_POWER = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40, "**": 40}

#: Binding power of unary signs; powers bind tighter (-x^2 is -(x^2)).
PREFIX_POWER = 30


class Token(NamedTuple):
    kind: str
    text: str
    position: int


def _constant(value) -> Poly:
    return Poly(value, X, Y, domain=sympy.QQ)


class ExpressionParser:
    """
    Pratt parser evaluating a polynomial expression in x and y to an exact
    :class:`sympy.Poly` over ℚ.

    Parameters
    ----------
    text : str
        Complete input, used for error reports
    offset : int, optional
        Character offset of the expression inside *text*, by default 0
    """

    def __init__(self, text: str, offset: int = 0):
        self.text = text
        self.tokens = list(self.tokenize(text, offset))
        self.index = 0

    def tokenize(self, text: str, offset: int) -> Iterator[Token]:
        position = offset
        while position < len(text):
            match = TOKEN_PATTERN.match(text, position)
            if match is None:
                message = messages.UNEXPECTED_CHARACTER.format(
                    character=text[position], position=position
                )
                raise SystemSyntaxError(message, text, position)
            if match.lastgroup != "space":
                yield Token(match.lastgroup, match.group(), position)
            position = match.end()
        yield Token("end", "", len(text))

    def error(self, template: str, token: Token, **kwargs):
        message = template.format(position=token.position, **kwargs)
        return SystemSyntaxError(message, self.text, token.position)

    @property
    def token(self) -> Token:
        return self.tokens[self.index]

    def advance(self) -> Token:
        token = self.token
        self.index += 1
        return token

    def parse(self) -> Poly:
        value = self.expression(0)
        if self.token.kind != "end":
            raise self.error(
                messages.UNEXPECTED_TOKEN, self.token, text=self.token.text
            )
        return value

    def expression(self, right_power: int) -> Poly:
        left = self.prefix(self.advance())
        while (
            self.token.kind == "op"
            and BINDING_POWER.get(self.token.text, 0) > right_power
        ):
            left = self.infix(self.advance(), left)
        return left

    def prefix(self, token: Token) -> Poly:
        if token.kind == "number":
            try:
                return _constant(to_rational(Decimal(token.text)))
            except (InvalidOperation, InvalidParameterError):
                raise self.error(
                    messages.BAD_LITERAL, token, literal=token.text
                )
        if token.kind == "name":
            if token.text == "x":
                return Poly(X, X, Y, domain=sympy.QQ)
            if token.text == "y":
                return Poly(Y, X, Y, domain=sympy.QQ)
            raise self.error(messages.UNKNOWN_VARIABLE, token, name=token.text)
        if token.text in ("+", "-"):
            operand = self.expression(PREFIX_POWER)
            return -operand if token.text == "-" else operand
        if token.text == "(":
            value = self.expression(0)
            if self.token.text != ")":
                raise self.error(messages.MISSING_PARENTHESIS, self.token)
            self.advance()
            return value
        raise self.error(
            messages.UNEXPECTED_TOKEN, token, text=token.text or "end"
        )

    def infix(self, token: Token, left: Poly) -> Poly:
        operator = token.text
        if operator in ("^", "**"):
            # Right associative
            right = self.expression(BINDING_POWER[operator] - 1)
            exponent = right.LC() if right.is_ground else None
            if exponent is None or not (
                exponent.is_integer and exponent >= 0
            ):
                raise self.error(messages.BAD_EXPONENT, token)
            return left ** int(exponent)
        right = self.expression(BINDING_POWER[operator])
        if operator == "+":
            return left + right
        if operator == "-":
            return left - right
        if operator == "*":
            return left * right
        if not right.is_ground or right.is_zero:
            raise self.error(messages.BAD_DIVISOR, token)
        return left * _constant(1 / right.LC())


def _from_poly(poly: Poly) -> NewtonSystem:
    m = poly.degree(Y) if not poly.is_zero else 0
    n = poly.degree(X) if not poly.is_zero else 0
    coefficients: List[List[sympy.Rational]] = [
        [sympy.Integer(0)] * (n + 1) for _ in range(m + 1)
    ]
    for (i, j), value in poly.terms():
        coefficients[j][i] = value
    return NewtonSystem(coefficients)


def _parse_coefficients(text: str) -> NewtonSystem:
    try:
        data = json.loads(text, parse_float=Decimal)
    except json.JSONDecodeError as error:
        message = messages.BAD_COEFFICIENTS.format(text=text)
        raise SystemSyntaxError(message, text, error.pos)
    if not isinstance(data, list) or not all(
        isinstance(p, list) for p in data
    ):
        raise SystemSyntaxError(messages.BAD_COEFFICIENTS.format(text=text))
    return NewtonSystem([[to_rational(c) for c in p] for p in data])


def parse_system(text: str) -> NewtonSystem:
    """
    Parses a system description.

    Parameters
    ----------
    text : str
        Equation of ẏ, with or without a leading ``y' =``, or a JSON list of
        coefficient lists

    Returns
    -------
    NewtonSystem
        System with exact rational coefficients

    Raises
    ------
    SystemSyntaxError
        For malformed input, with the offset of the offending token
    InputError
        For literals that are not exact rationals or a vanishing ẏ
    """
    if not text or not text.strip():
        raise SystemSyntaxError(messages.EMPTY_INPUT, text or "", 0)
    if text.lstrip().startswith("["):
        return _parse_coefficients(text)
    match = LHS_PATTERN.match(text)
    offset = match.end() if match else 0
    return _from_poly(ExpressionParser(text, offset).parse())


def _format_magnitude(value: sympy.Rational) -> str:
    if value.q == 1:
        return str(value.p)
    return f"{value.p}/{value.q}"


def _format_monomial(i: int, j: int) -> Optional[str]:
    factors = []
    for symbol, power in (("x", i), ("y", j)):
        if power == 1:
            factors.append(symbol)
        elif power > 1:
            factors.append(f"{symbol}^{power}")
    return "*".join(factors) or None


def format_expression(system: NewtonSystem) -> str:
    """
    Canonical right-hand side of ẏ: terms by increasing power of y, then of
    x, with rational coefficients written as ``p/q``.
    """
    pieces = []
    for j, polynomial in enumerate(system.polynomials):
        for i, value in enumerate(polynomial.coefficients):
            if value == 0:
                continue
            monomial = _format_monomial(i, j)
            magnitude = abs(value)
            if monomial is None:
                term = _format_magnitude(magnitude)
            elif magnitude == 1:
                term = monomial
            else:
                term = f"{_format_magnitude(magnitude)}*{monomial}"
            if not pieces:
                pieces.append(f"-{term}" if value < 0 else term)
            else:
                pieces.append(f"- {term}" if value < 0 else f"+ {term}")
    return " ".join(pieces)


def format_system(system: NewtonSystem) -> str:
    """
    Canonical equation form, read back identically by :func:`parse_system`.
    """
    return f"y' = {format_expression(system)}"


def parse_amplitudes(text: str) -> List[float]:
    """
    Reads a comma separated list of positive amplitudes.
    """
    try:
        values = [float(item) for item in text.split(",") if item.strip()]
    except ValueError:
        values = []
    if not values or not all(value > 0 for value in values):
        raise InputError(messages.BAD_AMPLITUDES.format(text=text))
    return values
