"""Recursive-descent reader for polynomials in x, y and for series arcs.

Grammar (whitespace ignored, implicit multiplication rejected)::

    expr   := ['-'] term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := base ('^' uint)?
    base   := '(' expr ')' | 'x' | 'y' | rational
    rational := uint ('/' uint)?

Series arcs additionally accept ``y^(p/q)`` and produce terms ``c*y^e``.
"""
from __future__ import annotations

from fractions import Fraction

from .algebra import BiPoly
from .errors import NonIntegerExponent, PolySyntaxError, VariableOutOfRange
from .puiseux import PuiseuxSeries


class _Reader:
    def __init__(self, text: str, series: bool):
        self.text = text
        self.pos = 0
        self.series = series

    def skip(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def fail(self, expected):
        got = self.peek() or "end of input"
        raise PolySyntaxError(f"expected one of {sorted(expected)}, got {got!r}",
                              self.pos, frozenset(expected))

    def take(self, ch: str):
        if self.peek() != ch:
            self.fail({ch})
        self.pos += 1

    def uint(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail({"digit"})
        return int(self.text[start:self.pos])

    def rational(self) -> Fraction:
        num = self.uint()
        if self.peek() == "/":
            self.pos += 1
            den = self.uint()
            if den == 0:
                raise PolySyntaxError(f"zero denominator", self.pos,
                                      frozenset({"nonzero digit"}))
            return Fraction(num, den)
        return Fraction(num)

    # polynomial values are dicts {(i, e): coeff}; e is a Fraction for arcs

    def expr(self) -> dict:
        neg = False
        if self.peek() == "-":
            self.pos += 1
            neg = True
        acc = self.term()
        if neg:
            acc = _scale(acc, -1)
        while self.peek() in ("+", "-"):
            op = self.text[self.pos]
            self.pos += 1
            rhs = self.term()
            acc = _add(acc, rhs if op == "+" else _scale(rhs, -1))
        return acc

    def term(self) -> dict:
        acc = self.factor()
        while self.peek() == "*":
            self.pos += 1
            acc = _mul(acc, self.factor())
        return acc

    def factor(self) -> dict:
        base, is_y = self.base()
        if self.peek() != "^":
            return base
        self.pos += 1
        if self.peek() == "(":
            at = self.pos
            self.pos += 1
            e = self.rational()
            self.take(")")
            if not (self.series and is_y):
                raise NonIntegerExponent(f"exponent must be a literal nonnegative "
                                         f"integer", at, frozenset({"digit"}))
            return {(0, e): Fraction(1)}
        if self.peek() == "-":
            raise NonIntegerExponent(f"negative exponent", self.pos,
                                     frozenset({"digit"}))
        n = self.uint()
        if self.peek() in ("/", "."):
            raise NonIntegerExponent(f"exponent must be an integer",
                                     self.pos, frozenset({"digit"}))
        out = {(0, Fraction(0)): Fraction(1)}
        for _ in range(n):
            out = _mul(out, base)
        return out

    def base(self):
        ch = self.peek()
        if ch == "(":
            self.pos += 1
            inner = self.expr()
            self.take(")")
            return inner, False
        if ch == "x":
            self.pos += 1
            return {(1, Fraction(0)): Fraction(1)}, False
        if ch == "y":
            self.pos += 1
            return {(0, Fraction(1)): Fraction(1)}, True
        if ch.isdigit():
            return {(0, Fraction(0)): self.rational()}, False
        if ch.isalpha():
            raise VariableOutOfRange(f"unknown variable {ch!r}", self.pos,
                                     frozenset({"x", "y"}))
        self.fail({"(", "x", "y", "digit"})

    def done(self):
        if self.peek():
            ch = self.peek()
            if ch.isalpha() or ch == "(" or ch.isdigit():
                raise PolySyntaxError(f"implicit multiplication is not "
                                      f"allowed", self.pos, frozenset({"*", "+", "-"}))
            self.fail({"+", "-", "*", "^", "end of input"})


def _add(a, b):
    out = dict(a)
    for k, v in b.items():
        out[k] = out.get(k, 0) + v
        if out[k] == 0:
            del out[k]
    return out


def _scale(a, c):
    return {k: v * c for k, v in a.items()}


def _mul(a, b):
    out: dict = {}
    for (i1, e1), c1 in a.items():
        for (i2, e2), c2 in b.items():
            k = (i1 + i2, e1 + e2)
            out[k] = out.get(k, 0) + c1 * c2
    return {k: v for k, v in out.items() if v != 0}


def _read(text: str, series: bool) -> dict:
    r = _Reader(text, series)
    if not r.peek():
        r.fail({"(", "x", "y", "digit", "-"})
    value = r.expr()
    r.done()
    return value


def parse_poly(text: str) -> BiPoly:
    """Exact BiPoly from text such as ``"x*(x - y^2 - y^3)"``."""
    value = _read(text, series=False)
    return BiPoly({(i, int(e)): c for (i, e), c in value.items()})


def parse_series(text: str) -> PuiseuxSeries:
    """Finite real arc x = sum c*y^e, e.g. ``"y^(3/2) - 2*y^(5/2)"``."""
    value = _read(text, series=True)
    if any(i for i, _ in value):
        bad = text.find("x")
        raise VariableOutOfRange(f"an arc may only involve y", bad,
                                 frozenset({"y"}))
    if any(e < 0 for _, e in value):
        raise NonIntegerExponent("negative exponent in arc", 0, frozenset({"digit"}))
    return PuiseuxSeries.from_terms((e, c) for (_, e), c in value.items())
