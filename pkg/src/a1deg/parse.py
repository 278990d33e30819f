"""Parser for rational-function expressions and scalar lists.

Grammar (whitespace ignored)::

    top    := expr ['/' expr]
    expr   := term (('+' | '-') term)*
    term   := unary ('*' unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ['^' INT]
    atom   := NUMBER | 'x' | '(' expr ')'
    NUMBER := INT ['/' INT]          (longest match: 1/2 is one literal)

Only one ``/`` may appear outside a number literal, and only at top level.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DomainError
from .field import QQ, Field, FieldElement
from .poly import Polynomial, RootDatum

MAX_EXPONENT = 4096


class ParseError(DomainError):
    def __init__(self, message: str, text: str, position: int):
        super().__init__(f"{message} at position {position} in {text!r}")
        self.position = position


_TOKEN = re.compile(r"\s*(?:(\d+(?:\s*/\s*\d+)?)|(x)|([-+*^/()]))")
# an exponent is a bare integer, so "x^3/5" is x^3 over 5
_EXPONENT = re.compile(r"\s*(\d+)")


def _tokenize(text: str) -> list[tuple[str, object, int]]:
    tokens = []
    pos = 0
    text_len = len(text)
    while pos < text_len:
        if text[pos:].strip() == "":
            break
        after_caret = bool(tokens) and tokens[-1][0] == "^"
        m = (_EXPONENT if after_caret else _TOKEN).match(text, pos)
        if after_caret and not m:
            m = _TOKEN.match(text, pos)
        if not m:
            start = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[start]!r}", text, start)
        start = m.start(m.lastindex)
        if m.group(1):
            num, _, den = m.group(1).partition("/")
            den = den.strip() or "1"
            if int(den) == 0:
                raise ParseError("zero denominator", text, start)
            tokens.append(("num", Fraction(int(num), int(den)), start))
        elif m.lastindex == 2:
            tokens.append(("x", None, start))
        else:
            tokens.append((m.group(3), None, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, field: Field):
        self.text = text
        self.field = field
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.tokens[self.i][0]

    def take(self, kind: str | None = None):
        tok = self.tokens[self.i]
        if kind is not None and tok[0] != kind:
            self.fail(f"expected {kind!r}, found {tok[0]!r}")
        self.i += 1
        return tok

    def fail(self, message: str):
        raise ParseError(message, self.text, self.tokens[self.i][2])

    def const(self, c: Fraction) -> Polynomial:
        try:
            return Polynomial([c], self.field)
        except DomainError as exc:
            self.fail(str(exc))

    def top(self) -> tuple[Polynomial, Polynomial]:
        num = self.expr()
        den = Polynomial([1], self.field)
        if self.peek() == "/":
            self.take("/")
            den = self.expr()
        if self.peek() == "/":
            self.fail("more than one top-level '/'")
        if self.peek() != "end":
            self.fail(f"unexpected {self.peek()!r}")
        return num, den

    def expr(self) -> Polynomial:
        acc = self.term()
        while self.peek() in "+-":
            op = self.take()[0]
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> Polynomial:
        acc = self.unary()
        while self.peek() == "*":
            self.take()
            acc = acc * self.unary()
        return acc

    def unary(self) -> Polynomial:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Polynomial:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            kind, value, _ = self.tokens[self.i]
            if kind != "num" or value.denominator != 1:
                self.fail("exponent must be a nonnegative integer literal")
            if value > MAX_EXPONENT:
                self.fail(f"exponent {value} exceeds {MAX_EXPONENT}")
            self.take()
            base = base ** int(value)
        return base

    def atom(self) -> Polynomial:
        kind, value, _ = self.tokens[self.i]
        if kind == "num":
            self.take()
            return self.const(value)
        if kind == "x":
            self.take()
            return Polynomial.x(self.field)
        if kind == "(":
            self.take()
            inner = self.expr()
            if self.peek() == "/":
                self.fail("division inside a subexpression")
            self.take(")")
            return inner
        self.fail(f"unexpected {kind!r}")


def parse_rational_function(text: str, field: Field = QQ) -> tuple[Polynomial, Polynomial]:
    """Parse ``text`` into an exact (numerator, denominator) pair over ``field``."""
    return _Parser(text, field).top()


def parse_polynomial(text: str, field: Field = QQ) -> Polynomial:
    f, g = parse_rational_function(text, field)
    if g.degree != 0:
        raise DomainError(f"{text!r} is not a polynomial")
    return f.scale(1 / g[0])


def parse_scalar(text: str, field: Field = QQ) -> FieldElement:
    f = parse_polynomial(text, field)
    if f.degree > 0:
        raise DomainError(f"{text!r} is not a constant")
    return f[0]


def parse_roots(text: str, field: Field = QQ) -> list[RootDatum]:
    """``"r:e,r:e,..."``; a bare ``r`` means multiplicity 1."""
    out = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            raise DomainError(f"empty root entry in {text!r}")
        root, sep, mult = item.rpartition(":")
        if not sep:
            root, mult = item, "1"
        if not mult.strip().isdigit() or int(mult) < 1:
            raise DomainError(f"bad multiplicity in {item!r}")
        out.append(RootDatum(parse_scalar(root, field), int(mult)))
    return out
