"""Parser for the polynomial text grammar.

Grammar::

    expr   := ['+'|'-'] term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := atom ('^' nat)?
    atom   := rational | ident | '(' expr ')'

A rational literal is ``123`` or ``123/456``.
"""

import re
from fractions import Fraction
from typing import List, Sequence, Tuple

from .errors import PolynomialSyntaxError, UndeclaredVariableError
from .Polynomial import Polynomial

TOKEN_PATTERN = re.compile(
    r"\s*(?:(?P<number>\d+(?:/\d+)?)|(?P<ident>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def tokenize(text: str) -> List[Tuple[str, str, int]]:
    """Split text into (kind, value, position) tokens."""
    tokens = []
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = TOKEN_PATTERN.match(text, position)
        if match is None:
            offset = position + len(text[position:]) - len(text[position:].lstrip())
            raise PolynomialSyntaxError(
                f"Unexpected character '{text[offset]}'", text, offset
            )
        kind = match.lastgroup
        tokens.append((kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(("end", "", len(text)))
    return tokens


class PolynomialParser:
    """Recursive descent parser producing canonical Polynomials."""

    def __init__(self, variables: Sequence[str]):
        """Initialize parser.

        Args:
            variables: Declared variables, in ring order
        """
        self.variables = tuple(variables)

    def parse(self, text: str) -> Polynomial:
        """Parse text into a Polynomial over the declared variables.

        Raises:
            PolynomialSyntaxError:   On malformed input (with position)
            UndeclaredVariableError: On identifiers that are not declared variables
        """
        self._text = text
        self._tokens = tokenize(text)
        self._index = 0

        if self._peek()[0] == "end":
            raise PolynomialSyntaxError("Empty expression", text, 0)

        result = self._expr()
        kind, value, position = self._peek()
        if kind != "end":
            raise PolynomialSyntaxError(f"Unexpected token '{value}'", text, position)
        return result

    def _peek(self):
        return self._tokens[self._index]

    def _advance(self):
        token = self._tokens[self._index]
        self._index += 1
        return token

    def _expr(self) -> Polynomial:
        sign = 1
        if self._peek()[1] in ("+", "-") and self._peek()[0] == "op":
            sign = -1 if self._advance()[1] == "-" else 1
        result = self._term()
        if sign < 0:
            result = -result

        while self._peek()[0] == "op" and self._peek()[1] in ("+", "-"):
            operator = self._advance()[1]
            term = self._term()
            result = result + term if operator == "+" else result - term
        return result

    def _term(self) -> Polynomial:
        result = self._factor()
        while self._peek()[0] == "op" and self._peek()[1] == "*":
            self._advance()
            result = result * self._factor()
        return result

    def _factor(self) -> Polynomial:
        base = self._atom()
        if self._peek()[0] == "op" and self._peek()[1] == "^":
            self._advance()
            kind, value, position = self._advance()
            if kind != "number" or "/" in value:
                raise PolynomialSyntaxError(
                    "Exponent must be a natural number", self._text, position
                )
            return base ** int(value)
        return base

    def _atom(self) -> Polynomial:
        kind, value, position = self._advance()
        if kind == "number":
            try:
                return Polynomial.constant(self.variables, Fraction(value))
            except ZeroDivisionError as e:
                raise PolynomialSyntaxError(
                    "Zero denominator", self._text, position
                ) from e

        if kind == "ident":
            if value not in self.variables:
                raise UndeclaredVariableError(value, position)
            return Polynomial.variable(self.variables, value)

        if kind == "op" and value == "(":
            inner = self._expr()
            closing_kind, closing, closing_position = self._advance()
            if closing_kind != "op" or closing != ")":
                raise PolynomialSyntaxError(
                    "Expected ')'", self._text, closing_position
                )
            return inner

        if kind == "end":
            raise PolynomialSyntaxError(
                "Unexpected end of expression", self._text, position
            )

        raise PolynomialSyntaxError(f"Unexpected token '{value}'", self._text, position)


def poly_parse(text: str, variables: Sequence[str]) -> Polynomial:
    """Parse a polynomial expression over the given variables."""
    return PolynomialParser(variables).parse(str(text))
