"""Parser for ring expressions like ``(x1 + 2*x2)^3 - x1*x2``.

Grammar::

    expr   := term (("+" | "-") term)*
    term   := factor ("*" factor)*
    factor := "-" factor | atom ("^" INT)?
    atom   := INT | "x" INT | "(" expr ")"
"""
from __future__ import annotations

import re

from .errors import ParseError
from .ring import RingElement, RingSpec, power

_TOKEN = re.compile(r"\s*(?:(\d+)|x(\d+)|(\*\*|[-+*^()]))")


def _tokenize(text: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            raise ParseError(f"unexpected character {text[pos:].lstrip()[:1]!r} at offset {pos}")
        num, var, op = match.groups()
        if num is not None:
            tokens.append(("int", num))
        elif var is not None:
            tokens.append(("var", var))
        else:
            tokens.append(("op", "^" if op == "**" else op))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str, spec: RingSpec):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.spec = spec

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            want = value or kind or "token"
            got = tok[1] if tok[0] else "end of input"
            raise ParseError(f"expected {want}, got {got}")
        self.pos += 1
        return tok

    def parse(self) -> RingElement:
        if not self.tokens:
            raise ParseError("empty expression")
        result = self.expr()
        if self.pos != len(self.tokens):
            raise ParseError(f"trailing input at {self.peek()[1]!r}")
        return result

    def expr(self):
        acc = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self):
        acc = self.factor()
        while self.peek() == ("op", "*"):
            self.take()
            acc = acc * self.factor()
        return acc

    def factor(self):
        if self.peek() == ("op", "-"):
            self.take()
            return -self.factor()
        base = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            return power(base, int(self.take("int")[1]))
        return base

    def atom(self):
        kind, value = self.peek()
        if kind == "int":
            self.take()
            return RingElement.constant(self.spec, int(value))
        if kind == "var":
            self.take()
            index = int(value)
            if not 1 <= index <= self.spec.m:
                raise ParseError(f"x{index} is not a generator of R({self.spec})")
            return RingElement.generator(self.spec, index - 1)
        if (kind, value) == ("op", "("):
            self.take()
            inner = self.expr()
            self.take("op", ")")
            return inner
        raise ParseError(f"unexpected {value if kind else 'end of input'!s}")


def parse_element(text: str, spec: RingSpec) -> RingElement:
    """Evaluate ``text`` in R, truncating after every product and power."""
    return _Parser(text, spec).parse()
