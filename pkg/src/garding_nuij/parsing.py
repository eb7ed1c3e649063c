"""Parser for the polynomial text grammar.

    expr    := term (('+' | '-') term)*
    term    := unary ('*' unary)*
    unary   := '-' unary | '+' unary | power
    power   := atom ('^' INT)?
    atom    := NUMBER ('/' NUMBER)? | VAR | '(' expr ')'

Variables are ``x1 .. xN``; when ``N <= 4`` the aliases ``x, y, z, w`` name
the first four. Error positions are 1-based character columns.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple, Optional

from .poly import ALIASES, MultiPoly, render

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class Token(NamedTuple):
    kind: str  # "num", "name", "op" or "end"
    text: str
    position: int


def tokenize(text: str) -> List[Token]:
    tokens = []
    pos = 0
    while True:
        match = _TOKEN.match(text, pos)
        if match is None:
            break
        if match.group(1) is not None:
            tokens.append(Token("num", match.group(1), match.start(1) + 1))
        elif match.group(2) is not None:
            tokens.append(Token("name", match.group(2), match.start(2) + 1))
        elif match.group(3) is not None:
            if match.group(3) not in "+-*/^()":
                raise ParseError(f"unexpected character {match.group(3)!r}", match.start(3) + 1)
            tokens.append(Token("op", match.group(3), match.start(3) + 1))
        else:
            break
        pos = match.end()
    tokens.append(Token("end", "", len(text) + 1))
    return tokens


class _Parser:
    def __init__(self, text: str, n: int):
        self.tokens = tokenize(text)
        self.i = 0
        self.n = n

    @property
    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self) -> Token:
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def accept(self, op: str) -> Optional[Token]:
        if self.peek.kind == "op" and self.peek.text == op:
            return self.take()
        return None

    def fail(self, what: str) -> ParseError:
        tok = self.peek
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        return ParseError(f"expected {what}, found {found}", tok.position)

    def parse(self) -> MultiPoly:
        result = self.expr()
        if self.peek.kind != "end":
            raise self.fail("operator or end of input")
        return result

    def expr(self) -> MultiPoly:
        result = self.term()
        while True:
            if self.accept("+"):
                result = result + self.term()
            elif self.accept("-"):
                result = result - self.term()
            else:
                return result

    def term(self) -> MultiPoly:
        result = self.unary()
        while self.accept("*"):
            result = result * self.unary()
        return result

    def unary(self) -> MultiPoly:
        if self.accept("-"):
            return -self.unary()
        if self.accept("+"):
            return self.unary()
        return self.power()

    def power(self) -> MultiPoly:
        base = self.atom()
        caret = self.accept("^")
        if caret is None:
            return base
        if self.peek.kind == "op" and self.peek.text == "-":
            raise ParseError("negative exponent", self.peek.position)
        if self.peek.kind != "num":
            raise self.fail("integer exponent")
        exponent = self.take()
        if self.peek.kind == "op" and self.peek.text == "/":
            raise ParseError("fractional exponent", exponent.position)
        return base ** int(exponent.text)

    def atom(self) -> MultiPoly:
        tok = self.peek
        if tok.kind == "num":
            self.take()
            value = Fraction(int(tok.text))
            if self.accept("/"):
                if self.peek.kind != "num":
                    raise self.fail("denominator")
                den = int(self.take().text)
                if den == 0:
                    raise ParseError("zero denominator", tok.position)
                value /= den
            return MultiPoly.constant(self.n, value)
        if tok.kind == "name":
            self.take()
            return MultiPoly.variable(self.n, self.variable(tok))
        if self.accept("("):
            inner = self.expr()
            if not self.accept(")"):
                raise self.fail("')'")
            return inner
        raise self.fail("number, variable or '('")

    def variable(self, tok: Token) -> int:
        name = tok.text
        if self.n <= len(ALIASES) and name in ALIASES[: self.n]:
            return ALIASES.index(name) + 1
        if re.fullmatch(r"x[1-9]\d*", name) and int(name[1:]) <= self.n:
            return int(name[1:])
        raise ParseError(f"unknown variable {name!r} for n={self.n}", tok.position)


def parse_poly(text: str, n: int) -> MultiPoly:
    """Parse ``text`` into a polynomial in ``n`` variables."""
    if n < 1:
        raise ValueError("need at least one variable")
    return _Parser(text, n).parse()


def max_variable_index(text: str) -> int:
    """Largest variable index mentioned in ``text`` (aliases count as 1..4), 0 if none."""
    best = 0
    for tok in tokenize(text):
        if tok.kind != "name":
            continue
        if tok.text in ALIASES:
            best = max(best, ALIASES.index(tok.text) + 1)
        elif re.fullmatch(r"x[1-9]\d*", tok.text):
            best = max(best, int(tok.text[1:]))
    return best


__all__ = ["ParseError", "parse_poly", "render", "tokenize", "max_variable_index"]
