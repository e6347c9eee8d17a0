"""Čech cochains in generic-entry form.

A ``(p, q)`` cochain is a single trace polynomial of word length ``q`` in
``B_1..B_p``: its entry at a generic index tuple ``(α_0, ..., α_p)`` written in
the ``α_0`` trivialisation with ``B_j = ω_{α_0 α_j}``.  Any other
``ω_{α_a α_b}`` is re-expressed through the additive cocycle rule as
``B_b - B_a`` (with ``B_0 = 0``), so every Čech operation is a substitution of
letters followed by cyclic re-canonicalisation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import permutations

from atiyah.algebra import TraceForm, normalize_trace_word


@dataclass(frozen=True)
class CechCochain:
    p: int
    q: int
    value: TraceForm

    def __post_init__(self):
        if self.p < 0 or self.q < 0:
            raise ValueError("bidegree must be non-negative")
        for (texps, dts, word), _ in self.value.items():
            if texps or dts:
                raise ValueError("Čech cochains carry no t or dt generators")
            if len(word) != self.q:
                raise ValueError(f"word {word} does not have length {self.q}")
            for x in word:
                if not isinstance(x, int):
                    raise ValueError(f"non-holomorphic generator {x!r} in a Čech cochain")
                if not 1 <= x <= self.p:
                    raise ValueError(f"B{x} out of range for Čech degree {self.p}")

    @classmethod
    def from_words(cls, p: int, q: int, words) -> "CechCochain":
        return cls(p, q, TraceForm.from_words(words))

    @classmethod
    def zero(cls, p: int, q: int) -> "CechCochain":
        return cls(p, q, TraceForm())

    def words(self) -> dict:
        return self.value.word_terms()

    def is_zero(self) -> bool:
        return self.value.is_zero()

    def __add__(self, other):
        _check_same(self, other)
        return CechCochain(self.p, self.q, self.value + other.value)

    def __sub__(self, other):
        _check_same(self, other)
        return CechCochain(self.p, self.q, self.value - other.value)

    def __neg__(self):
        return CechCochain(self.p, self.q, -self.value)

    def scale(self, c) -> "CechCochain":
        return CechCochain(self.p, self.q, self.value.scale(c))

    def d(self) -> "CechCochain":
        """De Rham differential, using ``dB_i = -B_i^2``."""
        return CechCochain(self.p, self.q + 1, self.value.d())

    def __str__(self):
        from atiyah.algebra import format_poly

        return format_poly(self.value)


def _check_same(a: CechCochain, b: CechCochain):
    if (a.p, a.q) != (b.p, b.q):
        raise ValueError(f"bidegree mismatch: {(a.p, a.q)} vs {(b.p, b.q)}")


def _require_cochain(c) -> CechCochain:
    if isinstance(c, CechCochain):
        return c
    raise TypeError("expected a CechCochain")


def _freeze(images: dict) -> tuple:
    return tuple(sorted((j, tuple(sorted(img.items()))) for j, img in images.items()))


@lru_cache(maxsize=None)
def _substitute_word(word: tuple, frozen: tuple) -> tuple:
    """Image of ``tr(word)`` as canonical ``(letters, coeff)`` pairs."""
    images = {j: dict(img) for j, img in frozen}
    partial = {(): Fraction(1)}
    for x in word:
        img = images.get(x, {x: 1})
        nxt: dict = {}
        for w, a in partial.items():
            for y, b in img.items():
                nw = w + (y,)
                nxt[nw] = nxt.get(nw, 0) + a * b
        partial = nxt
    out: dict = {}
    for w, a in partial.items():
        if not a:
            continue
        tw = normalize_trace_word(w)
        if tw is None:
            continue
        out[tw.letters] = out.get(tw.letters, 0) + tw.sign * a
    return tuple((w, a) for w, a in out.items() if a)


def substitute(value: TraceForm, images: dict) -> TraceForm:
    """Algebra map sending ``B_j`` to the linear combination ``images[j]``.

    ``images[j]`` is a dict ``letter -> coeff``; letters absent from ``images``
    are left unchanged.
    """
    frozen = _freeze(images)
    out: dict = {}
    for word, c in value.word_terms().items():
        for w, a in _substitute_word(word, frozen):
            out[w] = out.get(w, 0) + c * a
    return TraceForm.from_words({w: a for w, a in out.items() if a})


def face_images(p: int, m: int) -> dict:
    """Letter substitution realising the ``m``-th face of a ``p``-cochain evaluated on ``p+1`` indices."""
    if m == 0:
        # ω_{α_1 α_{j+1}} = B_{j+1} - B_1
        return {j: ({j + 1: 1, 1: -1}) for j in range(1, p + 1)}
    return {j: ({j: 1} if j < m else {j + 1: 1}) for j in range(1, p + 1)}


def cech_delta(c: CechCochain) -> CechCochain:
    """``(δc)_{α_0..α_{p+1}} = Σ_m (-1)^m c_{α_0..α̂_m..α_{p+1}}``."""
    c = _require_cochain(c)
    total = TraceForm()
    for m in range(c.p + 2):
        face = substitute(c.value, face_images(c.p, m))
        total = total + (face if m % 2 == 0 else -face)
    return CechCochain(c.p + 1, c.q, total)


def _omega(a: int, b: int) -> dict:
    """``ω_{α_a α_b}`` as a combination of B letters (``B_0 = 0``)."""
    out: dict = {}
    if b:
        out[b] = out.get(b, 0) + 1
    if a:
        out[a] = out.get(a, 0) - 1
    return {x: v for x, v in out.items() if v}


def permutation_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def reindex(c: CechCochain, sigma) -> CechCochain:
    """The cochain ``c_{α_σ(0) .. α_σ(p)}`` re-expressed in the ``α_0`` basis."""
    images = {j: _omega(sigma[0], sigma[j]) for j in range(1, c.p + 1)}
    return CechCochain(c.p, c.q, substitute(c.value, images))


@lru_cache(maxsize=None)
def _alt_word(p: int, word: tuple) -> tuple:
    total: dict = {}
    for sigma in permutations(range(p + 1)):
        sign = permutation_sign(sigma)
        images = _freeze({j: _omega(sigma[0], sigma[j]) for j in range(1, p + 1)})
        for w, a in _substitute_word(word, images):
            total[w] = total.get(w, 0) + sign * a
    scale = Fraction(1, math.factorial(p + 1))
    return tuple((w, a * scale) for w, a in total.items() if a)


def skew_symmetrise(c: CechCochain) -> CechCochain:
    c = _require_cochain(c)
    out: dict = {}
    for word, coeff in c.value.word_terms().items():
        for w, a in _alt_word(c.p, word):
            out[w] = out.get(w, 0) + coeff * a
    return CechCochain(c.p, c.q, TraceForm.from_words(out))


def atiyah_cocycle(k: int) -> CechCochain:
    """``tr ∏_{i=1..k} (B_i - B_{i-1})`` with ``B_0 = 0``: the entry ``tr(ω_{01} ω_{12} ⋯ ω_{k-1,k})``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    partial = {(): Fraction(1)}
    for i in range(1, k + 1):
        factor = _omega(i - 1, i)
        nxt: dict = {}
        for w, a in partial.items():
            for y, b in factor.items():
                nxt[w + (y,)] = nxt.get(w + (y,), 0) + a * b
        partial = nxt
    return CechCochain.from_words(k, k, partial)
