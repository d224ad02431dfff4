"""Recursive-descent parser for integer polynomial expressions.

Grammar: single-letter variables a-z, integer literals, + - * ^ and
parentheses; ^ binds tighter than *, unary minus is allowed, whitespace is
ignored.  Exponents must be nonnegative integer literals.
"""

from __future__ import annotations

from .polynomials import IntPolynomial


class PolynomialSyntaxError(ValueError):
    def __init__(self, message: str, pos: int):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str | None:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def take(self) -> str:
        c = self.peek()
        if c is None:
            raise PolynomialSyntaxError("unexpected end of input", self.pos)
        self.pos += 1
        return c

    def expect(self, c: str):
        got = self.peek()
        if got != c:
            raise PolynomialSyntaxError(f"expected {c!r}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self._skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise PolynomialSyntaxError("expected an integer", start)
        return int(self.text[start : self.pos])

    # expr := term (('+'|'-') term)*
    def expr(self) -> IntPolynomial:
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    # term := unary ('*' unary)*
    def term(self) -> IntPolynomial:
        acc = self.unary()
        while self.peek() == "*":
            self.take()
            acc = acc * self.unary()
        return acc

    # unary := '-' unary | power
    def unary(self) -> IntPolynomial:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        return self.power()

    # power := atom ('^' INT)?
    def power(self) -> IntPolynomial:
        base = self.atom()
        if self.peek() == "^":
            self.take()
            self._skip_ws()
            if self.peek() == "-":
                raise PolynomialSyntaxError("exponent must be nonnegative", self.pos)
            return base ** self.integer()
        return base

    # atom := INT | VAR | '(' expr ')'
    def atom(self) -> IntPolynomial:
        c = self.peek()
        if c is None:
            raise PolynomialSyntaxError("unexpected end of input", self.pos)
        if c == "(":
            self.take()
            inner = self.expr()
            self.expect(")")
            return inner
        if c.isdigit():
            return IntPolynomial.constant(self.integer())
        if c.isalpha() and c.islower():
            self.take()
            return IntPolynomial.variable(c)
        raise PolynomialSyntaxError(f"unexpected character {c!r}", self.pos)


def parse_polynomial(text: str) -> IntPolynomial:
    """Parse an expression into expanded term form (variables sorted)."""
    p = _Parser(text)
    poly = p.expr()
    if p.peek() is not None:
        raise PolynomialSyntaxError("trailing input", p.pos)
    return poly.with_variables(sorted(poly.used_variables()))
