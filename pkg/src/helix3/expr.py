"""Tiny arithmetic-expression parser for exact command-line parameters.

Values like 5*sqrt(3)/4 must reach the solver exact to double precision;
typing a truncated decimal would flip rational/irrational verdicts.
Grammar: + - * /, parentheses, unary minus, sqrt(...), pi, and decimal
literals. No eval, no names other than sqrt and pi.
"""

from __future__ import annotations

import math
import re

__all__ = ["parse_number"]

_TOKEN = re.compile(
    r"\s*(?:(?P<num>\d+(?:\.\d*)?(?:[eE][+-]?\d+)?|\.\d+(?:[eE][+-]?\d+)?)"
    r"|(?P<name>[A-Za-z_]+)"
    r"|(?P<op>[()+\-*/]))"
)


class _Parser:
    def __init__(self, text: str):
        self.tokens = self._tokenize(text)
        self.pos = 0

    @staticmethod
    def _tokenize(text: str) -> list[str]:
        text = text.rstrip()
        tokens = []
        idx = 0
        while idx < len(text):
            m = _TOKEN.match(text, idx)
            if not m:
                raise ValueError(f"bad character at {text[idx:]!r}")
            tokens.append(m.group(m.lastgroup))
            idx = m.end()
        return tokens

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self) -> str:
        tok = self.peek()
        if tok is None:
            raise ValueError("unexpected end of expression")
        self.pos += 1
        return tok

    def expect(self, tok: str) -> None:
        got = self.take()
        if got != tok:
            raise ValueError(f"expected {tok!r}, got {got!r}")

    def expr(self) -> float:
        value = self.term()
        while self.peek() in ("+", "-"):
            if self.take() == "+":
                value += self.term()
            else:
                value -= self.term()
        return value

    def term(self) -> float:
        value = self.factor()
        while self.peek() in ("*", "/"):
            if self.take() == "*":
                value *= self.factor()
            else:
                value /= self.factor()
        return value

    def factor(self) -> float:
        if self.peek() == "-":
            self.take()
            return -self.factor()
        return self.primary()

    def primary(self) -> float:
        tok = self.take()
        if tok == "(":
            value = self.expr()
            self.expect(")")
            return value
        if tok == "sqrt":
            self.expect("(")
            value = self.expr()
            self.expect(")")
            if value < 0:
                raise ValueError(f"sqrt of negative value {value}")
            return math.sqrt(value)
        if tok == "pi":
            return math.pi
        try:
            return float(tok)
        except ValueError:
            raise ValueError(f"unknown token {tok!r}") from None


def parse_number(text: str) -> float:
    """Evaluate an arithmetic expression to a float; raises ValueError."""
    parser = _Parser(text)
    value = parser.expr()
    if parser.peek() is not None:
        raise ValueError(f"trailing input {parser.tokens[parser.pos:]!r}")
    return value
