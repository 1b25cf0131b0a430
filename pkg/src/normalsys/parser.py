"""Polynomial expression parser.

Grammar (whitespace ignored, no implicit multiplication)::

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | power
    power   := primary ('^' INTEGER)*
    primary := NUMBER | VARIABLE | '(' expr ')'

NUMBER is an integer or a rational literal ``a/b``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .poly import BiPoly

XY = ("x", "y")
OPERATOR_VARS = ("Dx", "Dy")

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^()])|(?P<bad>\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op", "end"
    text: str
    column: int  # 1-based


def tokenize(text: str) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:  # only trailing whitespace left
            break
        kind = m.lastgroup
        col = m.start(kind) + 1
        if kind == "bad":
            raise ParseError(f"unexpected character {m.group(kind)!r}", col)
        tokens.append(Token(kind, m.group(kind), col))
        pos = m.end()
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, variables: tuple[str, str]):
        self.tokens = tokenize(text)
        self.pos = 0
        self.variables = variables

    @property
    def tok(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def parse(self) -> BiPoly:
        if self.tok.kind == "end":
            raise ParseError("empty expression", self.tok.column)
        result = self.expr()
        if self.tok.kind != "end":
            raise ParseError(f"unexpected {self.tok.text!r}", self.tok.column)
        return result

    def expr(self) -> BiPoly:
        left = self.term()
        while self.tok.kind == "op" and self.tok.text in "+-":
            op = self.advance().text
            right = self.term()
            left = left + right if op == "+" else left - right
        return left

    def term(self) -> BiPoly:
        left = self.unary()
        while self.tok.kind == "op" and self.tok.text == "*":
            self.advance()
            left = left * self.unary()
        return left

    def unary(self) -> BiPoly:
        if self.tok.kind == "op" and self.tok.text == "-":
            self.advance()
            return -self.unary()
        return self.power()

    def power(self) -> BiPoly:
        base = self.primary()
        while self.tok.kind == "op" and self.tok.text == "^":
            self.advance()
            t = self.tok
            if t.kind != "num" or "/" in t.text:
                raise ParseError("exponent must be a nonnegative integer literal", t.column)
            self.advance()
            base = base ** int(t.text)
        return base

    def primary(self) -> BiPoly:
        t = self.tok
        if t.kind == "num":
            self.advance()
            num, _, den = t.text.partition("/")
            if den and int(den) == 0:
                raise ParseError("zero denominator", t.column)
            return BiPoly.constant(Fraction(int(num), int(den) if den else 1))
        if t.kind == "name":
            if t.text not in self.variables:
                raise ParseError(f"unknown variable {t.text!r}", t.column)
            self.advance()
            return BiPoly.x() if t.text == self.variables[0] else BiPoly.y()
        if t.kind == "op" and t.text == "(":
            self.advance()
            inner = self.expr()
            if not (self.tok.kind == "op" and self.tok.text == ")"):
                raise ParseError("expected ')'", self.tok.column)
            self.advance()
            return inner
        if t.kind == "end":
            raise ParseError("unexpected end of input", t.column)
        raise ParseError(f"unexpected {t.text!r}", t.column)


def parse_polynomial(text: str, variables: tuple[str, str] = XY) -> BiPoly:
    """Parse text into a BiPoly; ``variables`` names the first and second variable."""
    return _Parser(text, variables).parse()


def parse_operator(text: str) -> BiPoly:
    """Parse an operator symbol written in ``Dx``, ``Dy``."""
    return parse_polynomial(text, OPERATOR_VARS)
