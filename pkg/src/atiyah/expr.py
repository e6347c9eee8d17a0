"""Parse products of linear factors such as ``13/5 A^5 - A^2(B-A)^2(C-A)``.

Letters name 1-forms; by default ``A, B, C, D`` are ``B_1..B_4`` and
``X = B - A``, ``Y = C - B``, ``Z = D - C``.  Juxtaposition is the
non-commutative product, ``^n`` a power, and a leading ``p/q`` a rational
coefficient.
"""

from __future__ import annotations

import re
from fractions import Fraction

from atiyah.algebra import TraceForm
from atiyah.cech import CechCochain
from atiyah.freealg import FreeWordPolynomial

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z]\w*)|(.))")


def default_letters() -> dict:
    a, b, c, d = (FreeWordPolynomial.letter(i) for i in (1, 2, 3, 4))
    return {"A": a, "B": b, "C": c, "D": d, "X": b - a, "Y": c - b, "Z": d - c}


class ParseError(ValueError):
    pass


class _Parser:
    def __init__(self, text: str, letters: dict):
        self.tokens = []
        for num, name, sym in _TOKEN.findall(text):
            if num:
                self.tokens.append(("num", int(num)))
            elif name:
                # a run like "AB" is a product of single-letter names
                for ch in name:
                    if ch not in letters:
                        raise ParseError(f"unknown letter {ch!r}")
                    self.tokens.append(("var", ch))
            elif sym.strip():
                self.tokens.append(("sym", sym))
        self.pos = 0
        self.letters = letters

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ParseError(f"unexpected token {tok[1]!r} at position {self.pos}")
        self.pos += 1
        return tok

    def parse(self) -> FreeWordPolynomial:
        out = self.sum()
        if self.peek()[0] is not None:
            raise ParseError(f"trailing input at token {self.pos}")
        return out

    def sum(self) -> FreeWordPolynomial:
        sign = 1
        if self.peek() == ("sym", "-"):
            self.take()
            sign = -1
        elif self.peek() == ("sym", "+"):
            self.take()
        total = self.term() * sign
        while self.peek() in (("sym", "+"), ("sym", "-")):
            sign = 1 if self.take()[1] == "+" else -1
            total = total + self.term() * sign
        return total

    def term(self) -> FreeWordPolynomial:
        coeff = Fraction(1)
        had_num = self.peek()[0] == "num"
        if had_num:
            coeff = Fraction(self.take()[1])
            if self.peek() == ("sym", "/"):
                self.take()
                coeff /= self.take("num")[1]
        prod = FreeWordPolynomial.constant(coeff)
        seen = False
        while self.peek()[0] == "var" or self.peek() == ("sym", "("):
            prod = prod * self.factor()
            seen = True
        if not seen and not had_num:
            raise ParseError(f"expected a factor at token {self.pos}")
        return prod

    def factor(self) -> FreeWordPolynomial:
        if self.peek()[0] == "var":
            base = self.letters[self.take()[1]]
        else:
            self.take("sym", "(")
            base = self.sum()
            self.take("sym", ")")
        if self.peek() == ("sym", "^"):
            self.take()
            base = base ** self.take("num")[1]
        return base


def parse(text: str, letters: dict | None = None) -> FreeWordPolynomial:
    return _Parser(text, letters or default_letters()).parse()


def trace_of(poly: FreeWordPolynomial) -> TraceForm:
    return TraceForm.from_words(poly.terms)


def cochain(text: str, p: int, q: int, scale=1, letters: dict | None = None) -> CechCochain:
    """``scale * tr(text)`` as a ``(p, q)`` cochain."""
    return CechCochain(p, q, trace_of(parse(text, letters)).scale(scale))
