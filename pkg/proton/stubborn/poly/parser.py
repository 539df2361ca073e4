"""
Polynomial expression grammar: parser and canonical printer.


Copyright (c) 2026 Proton AG

This file is part of Proton Stubborn Cert.

Proton Stubborn Cert is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

Proton Stubborn Cert is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with Proton Stubborn Cert.  If not, see <https://www.gnu.org/licenses/>.


Grammar, whitespace insignificant:

    expr     := ['+'|'-'] term (('+'|'-') term)*
    term     := factor ('*' factor)*
    factor   := base ('^' uint)?
    base     := rational | var | 'sqrt' '(' expr ')' | '(' expr ')'
    rational := int ('/' uint)?
"""
import logging
import re
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from proton.stubborn.exceptions import ParseError
from proton.stubborn.poly import field
from proton.stubborn.poly.field import FieldElem, format_scalar
from proton.stubborn.poly.mpoly import MPoly, default_names

logger = logging.getLogger(__name__)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*\Z")


class _Token:  # pylint: disable=too-few-public-methods
    __slots__ = ("kind", "text", "offset")

    def __init__(self, kind: str, text: str, offset: int):
        self.kind = kind
        self.text = text
        self.offset = offset


def _tokenize(text: str) -> List[_Token]:
    tokens = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            break  # trailing whitespace
        number, name, symbol = match.groups()
        start = match.start(match.lastindex)
        offset = len(text[:start].encode("utf-8"))
        if number is not None:
            tokens.append(_Token("int", number, offset))
        elif name is not None:
            tokens.append(_Token("name", name, offset))
        elif symbol in "+-*^/()":
            tokens.append(_Token(symbol, symbol, offset))
        else:
            raise ParseError(f"Unexpected character {symbol!r}", offset)
        position = match.end()
    tokens.append(_Token("end", "", len(text.encode("utf-8"))))
    return tokens


class _Parser:
    """Recursive descent over the token list."""

    def __init__(self, text: str, var_names: Sequence[str]):
        self._tokens = _tokenize(text)
        self._index = 0
        self._names = {name: i for i, name in enumerate(var_names)}
        self._nvars = len(var_names)

    @property
    def _current(self) -> _Token:
        return self._tokens[self._index]

    def _advance(self) -> _Token:
        token = self._current
        self._index += 1
        return token

    def _expect(self, kind: str) -> _Token:
        token = self._current
        if token.kind != kind:
            found = token.text or "end of input"
            raise ParseError(f"Expected {kind!r} but found {found!r}", token.offset)
        return self._advance()

    def parse(self) -> MPoly:
        result = self._expr()
        if self._current.kind != "end":
            raise ParseError(f"Unexpected {self._current.text!r}", self._current.offset)
        return result

    def _expr(self) -> MPoly:
        negate = False
        if self._current.kind in ("+", "-"):
            negate = self._advance().kind == "-"
        result = self._term()
        if negate:
            result = -result
        while self._current.kind in ("+", "-"):
            operator = self._advance().kind
            term = self._term()
            result = result + term if operator == "+" else result - term
        return result

    def _term(self) -> MPoly:
        result = self._factor()
        while self._current.kind == "*":
            self._advance()
            result = result * self._factor()
        return result

    def _factor(self) -> MPoly:
        base = self._base()
        if self._current.kind == "^":
            self._advance()
            exponent = int(self._expect("int").text)
            return base ** exponent
        return base

    def _base(self) -> MPoly:
        token = self._current
        if token.kind == "int":
            self._advance()
            value = Fraction(int(token.text))
            if self._current.kind == "/":
                self._advance()
                denominator = self._expect("int")
                if int(denominator.text) == 0:
                    raise ParseError("Zero denominator", denominator.offset)
                value /= int(denominator.text)
            return MPoly.constant(self._nvars, value)
        if token.kind == "name" and token.text == "sqrt":
            self._advance()
            self._expect("(")
            argument = self._expr()
            self._expect(")")
            if not argument.is_constant():
                raise ParseError("sqrt argument must be a constant", token.offset)
            return MPoly.constant(self._nvars, field.sqrt(argument.constant_term()))
        if token.kind == "name":
            if token.text not in self._names:
                raise ParseError(f"Undeclared variable {token.text!r}", token.offset)
            self._advance()
            return MPoly.variable(self._nvars, self._names[token.text])
        if token.kind == "(":
            self._advance()
            inner = self._expr()
            self._expect(")")
            return inner
        found = token.text or "end of input"
        raise ParseError(f"Unexpected {found!r}", token.offset)


def parse_poly(text: str, var_names: Optional[Sequence[str]] = None) -> MPoly:
    """Parses an expression over the declared variables (default x, y, z)."""
    var_names = tuple(var_names or default_names(3))
    for name in var_names:
        if not _NAME.match(name) or name == "sqrt":
            raise ValueError(f"Invalid variable name {name!r}")
    if len(set(var_names)) != len(var_names):
        raise ValueError("Variable names must be distinct")
    result = _Parser(text, var_names).parse()
    logger.debug(f"Parsed {len(result.terms)} terms over {var_names}")
    return result


def _format_monomial(monomial: Tuple[int, ...], names: Sequence[str]) -> str:
    factors = []
    for name, power in zip(names, monomial):
        if power == 1:
            factors.append(name)
        elif power > 1:
            factors.append(f"{name}^{power}")
    return "*".join(factors)


def format_poly(poly: MPoly, names: Optional[Iterable[str]] = None) -> str:
    """Prints the polynomial in the grammar accepted by ``parse_poly``."""
    names = tuple(names) if names is not None else default_names(poly.nvars)
    if poly.is_zero():
        return "0"

    pieces = []
    for monomial, coefficient in poly.sorted_terms():
        body = _format_monomial(monomial, names)
        if coefficient.is_rational():
            value = coefficient.to_fraction()
            sign, magnitude = ("-" if value < 0 else "+"), abs(value)
            if not body:
                text = format_scalar(FieldElem(magnitude))
            elif magnitude == 1:
                text = body
            else:
                text = f"{format_scalar(FieldElem(magnitude))}*{body}"
        else:
            sign = "+"
            scalar = f"({format_scalar(coefficient)})"
            text = f"{scalar}*{body}" if body else scalar
        pieces.append((sign, text))

    first_sign, first_text = pieces[0]
    output = ("-" if first_sign == "-" else "") + first_text
    for sign, text in pieces[1:]:
        output += f"{sign}{text}"
    return output
