"""Free non-commutative polynomials: rational combinations of plain words."""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping


class FreeWordPolynomial:
    """Linear combination of words (tuples of letters) with no relations at all."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping | None = None):
        self.terms = {tuple(w): Fraction(c) for w, c in (terms or {}).items() if c}

    @classmethod
    def letter(cls, x) -> "FreeWordPolynomial":
        return cls({(x,): 1})

    @classmethod
    def constant(cls, c) -> "FreeWordPolynomial":
        return cls({(): c})

    def __add__(self, other):
        out = dict(self.terms)
        for w, c in other.terms.items():
            out[w] = out.get(w, 0) + c
        return FreeWordPolynomial(out)

    def __neg__(self):
        return FreeWordPolynomial({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return FreeWordPolynomial({w: c * other for w, c in self.terms.items()})
        out: dict = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                out[w] = out.get(w, 0) + c1 * c2
        return FreeWordPolynomial(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        out = FreeWordPolynomial.constant(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, FreeWordPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def coefficient(self, word) -> Fraction:
        return self.terms.get(tuple(word), Fraction(0))

    def relabel(self, mapping) -> "FreeWordPolynomial":
        """Apply a letter substitution ``x -> mapping(x)`` (no signs)."""
        fn = mapping if callable(mapping) else mapping.__getitem__
        out: dict = {}
        for w, c in self.terms.items():
            nw = tuple(fn(x) for x in w)
            out[nw] = out.get(nw, 0) + c
        return FreeWordPolynomial(out)

    def __repr__(self):
        if not self.terms:
            return "FreeWordPolynomial(0)"
        body = " + ".join(f"{c}*{''.join(f'x{x}' for x in w) or '1'}" for w, c in sorted(self.terms.items()))
        return f"FreeWordPolynomial({body})"
