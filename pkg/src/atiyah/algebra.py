"""Graded non-commutative algebra of simplicial endomorphism-valued forms.

A term is stored in the canonical layout ``coeff * t^a * word * dt_S``:

* ``t^a`` is a monomial in the barycentric coordinates ``t_1, t_2, ...``
  (degree 0, central),
* ``word`` is an ordered product of degree-1 endomorphism-valued generators:
  an ``int`` ``i >= 1`` stands for ``B_i = ω_{α_0 α_i}`` and a ``str`` stands
  for a central, closed, square-zero 1-form (e.g. ``dz/z``),
* ``dt_S`` is the wedge ``dt_{s_1} ∧ ... ∧ dt_{s_n}`` with ``s`` ascending.

Keys are ``(texps, dts, word)`` with ``texps`` a sorted tuple of
``(index, exponent)`` pairs.  ``t_0`` and ``B_0`` never occur.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, NamedTuple, Union

Letter = Union[int, str]
Word = tuple
TExps = tuple
Key = tuple  # (TExps, dts, Word)

_EMPTY: Key = ((), (), ())


def _letter_key(letter: Letter) -> tuple:
    # B_i ordered by index, abelian generators after every B_i
    if isinstance(letter, int):
        return (0, letter, "")
    return (1, 0, letter)


def letter_name(letter: Letter) -> str:
    return f"B{letter}" if isinstance(letter, int) else str(letter)


# ---------------------------------------------------------------------------
# helpers on the three parts of a key


def _add_exps(a: TExps, b: TExps) -> TExps:
    if not a:
        return b
    if not b:
        return a
    merged = dict(a)
    for i, e in b:
        merged[i] = merged.get(i, 0) + e
    return tuple(sorted(merged.items()))


def _wedge(a: tuple, b: tuple):
    """Return ``(sign, merged)`` for ``dt_a ∧ dt_b`` or ``None`` if it vanishes."""
    if not a:
        return 1, b
    if not b:
        return 1, a
    if set(a) & set(b):
        return None
    inversions = sum(1 for x in a for y in b if x > y)
    return (-1 if inversions % 2 else 1), tuple(sorted(a + b))


@lru_cache(maxsize=None)
def normalize_word(word: Word):
    """Move abelian generators to the right end of a word, with Koszul signs.

    Returns ``(sign, word)`` or ``None`` when an abelian generator repeats.
    """
    if all(isinstance(x, int) for x in word):
        return 1, word
    sign = 1
    bs = []
    abelian = []
    for x in word:
        if isinstance(x, int):
            # x jumps over every abelian letter already collected
            if len(abelian) % 2:
                sign = -sign
            bs.append(x)
        else:
            abelian.append(x)
    if len(set(abelian)) != len(abelian):
        return None
    # bubble-sort the abelian tail, one sign flip per transposition
    inversions = sum(
        1
        for i in range(len(abelian))
        for j in range(i + 1, len(abelian))
        if abelian[i] > abelian[j]
    )
    if inversions % 2:
        sign = -sign
    return sign, tuple(bs) + tuple(sorted(abelian))


def _mul_keys(k1: Key, k2: Key):
    t1, d1, w1 = k1
    t2, d2, w2 = k2
    # w2 passes dt_{d1}
    sign = -1 if (len(d1) * len(w2)) % 2 else 1
    wedged = _wedge(d1, d2)
    if wedged is None:
        return None
    s, dts = wedged
    sign *= s
    word = w1 + w2
    if word and not all(isinstance(x, int) for x in word):
        normed = normalize_word(word)
        if normed is None:
            return None
        s, word = normed
        sign *= s
    return sign, (_add_exps(t1, t2), dts, word)


def _differential_key(key: Key):
    """Yield ``(sign_times_multiplicity, key)`` pairs of ``d`` applied to one term."""
    texps, dts, word = key
    # d_X via graded Leibniz; d B_i = -B_i B_i, abelian letters closed
    for j, letter in enumerate(word):
        if isinstance(letter, int):
            sign = -1 if j % 2 == 0 else 1
            new_word = word[:j] + (letter, letter) + word[j + 1:]
            yield sign, (texps, dts, new_word)
    # d_Δ acting on t^a dt_S, sign (-1)^{|word|} for passing the X-part
    base = -1 if len(word) % 2 else 1
    for pos, (i, e) in enumerate(texps):
        if i in dts:
            continue
        if e == 1:
            new_t = texps[:pos] + texps[pos + 1:]
        else:
            new_t = texps[:pos] + ((i, e - 1),) + texps[pos + 1:]
        smaller = sum(1 for s in dts if s < i)
        sign = base * (-1 if smaller % 2 else 1)
        yield sign * e, (new_t, tuple(sorted(dts + (i,))), word)


# ---------------------------------------------------------------------------
# trace words


class TraceWord(NamedTuple):
    """Canonical signed representative of a cyclic class: ``tr(w) = sign * tr(letters)``."""

    letters: Word
    sign: int


@lru_cache(maxsize=None)
def normalize_trace_word(letters: Word) -> TraceWord | None:
    """Canonicalise ``tr(letters)`` under the graded cyclic law.

    Each single rotation of a length-``m`` word of 1-forms contributes
    ``(-1)^(m-1)``.  The representative is the lexicographically least
    rotation.  Returns ``None`` (the zero trace) when two rotations reach the
    least word with opposite signs, e.g. ``tr(A^{2k}) = 0``.

    Abelian letters are scalar forms, so ``tr(w θ) = tr(w) θ``: they are moved
    to the right end first and only the ``B`` part is rotated.
    """
    letters = tuple(letters)
    tail: Word = ()
    outer = 1
    if not all(isinstance(x, int) for x in letters):
        normed = normalize_word(letters)
        if normed is None:
            return None
        outer, letters = normed
        n = sum(1 for x in letters if isinstance(x, int))
        letters, tail = letters[:n], letters[n:]
    m = len(letters)
    if m == 0:
        return TraceWord(tail, outer)
    odd_step = (m - 1) % 2 == 1
    best = None
    best_sign = 0
    for r in range(m):
        cand = letters[r:] + letters[:r]
        sign = -1 if (odd_step and r % 2) else 1
        if best is None or cand < best:
            best, best_sign = cand, sign
        elif cand == best and sign != best_sign:
            return None
    return TraceWord(best + tail, outer * best_sign)


# ---------------------------------------------------------------------------
# polynomials


def _clean(terms: Mapping) -> dict:
    return {k: Fraction(v) for k, v in terms.items() if v}


class _Poly:
    """Shared linear structure: an immutable map ``key -> Fraction``."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping | None = None):
        self._terms = _clean(terms) if terms else {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict):
        obj = cls.__new__(cls)
        obj._terms = {k: v for k, v in terms.items() if v}
        obj._hash = None
        return obj

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return not self._terms
        if type(other) is not type(self):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((type(self).__name__, frozenset(self._terms.items())))
        return self._hash

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        if type(other) is not type(self):
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return type(self)._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return type(self)._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "_Poly":
        c = Fraction(c)
        if not c:
            return type(self)()
        return type(self)._raw({k: c * v for k, v in self._terms.items()})

    def coefficient(self, key) -> Fraction:
        return self._terms.get(key, Fraction(0))

    def type_component(self, i: int, j: int):
        """Sub-sum of terms of X-degree ``i`` and Δ-degree ``j``."""
        return type(self)._raw(
            {k: v for k, v in self._terms.items() if len(k[2]) == i and len(k[1]) == j}
        )

    def types(self) -> set:
        return {(len(k[2]), len(k[1])) for k in self._terms}

    def max_index(self) -> int:
        """Largest index of any t, dt or B generator occurring."""
        m = 0
        for texps, dts, word in self._terms:
            for i, _ in texps:
                m = max(m, i)
            for i in dts:
                m = max(m, i)
            for x in word:
                if isinstance(x, int):
                    m = max(m, x)
        return m

    def sorted_items(self):
        return sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]))

    def __repr__(self):
        return f"{type(self).__name__}({format_poly(self)})"


def _sort_key(key: Key):
    texps, dts, word = key
    return (len(word), tuple(_letter_key(x) for x in word), len(dts), dts, texps)


class Form(_Poly):
    """Exact-rational combination of simplicial endomorphism-valued form terms."""

    __slots__ = ()

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, Form):
            return NotImplemented
        out: dict = {}
        for k1, c1 in self._terms.items():
            for k2, c2 in other._terms.items():
                prod = _mul_keys(k1, k2)
                if prod is None:
                    continue
                sign, key = prod
                out[key] = out.get(key, 0) + sign * c1 * c2
        return Form._raw(out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = one()
        for _ in range(n):
            out = out * self
        return out

    def d(self) -> "Form":
        """Total differential ``d_X + (-1)^{X-degree} d_Δ``."""
        return Form._raw(_apply_d(self._terms, normalize_words=True))


def _apply_d(terms: Mapping, normalize_words: bool) -> dict:
    out: dict = {}
    for key, c in terms.items():
        for sign, new in _differential_key(key):
            if normalize_words and new[2] and not all(isinstance(x, int) for x in new[2]):
                normed = normalize_word(new[2])
                if normed is None:
                    continue
                s, w = normed
                sign *= s
                new = (new[0], new[1], w)
            out[new] = out.get(new, 0) + sign * c
    return out


class TraceForm(_Poly):
    """Combination of ``t^a * tr(word) * dt_S`` with every word cyclically canonical."""

    __slots__ = ()

    @classmethod
    def from_words(cls, words: Mapping[Word, object]) -> "TraceForm":
        """Build a purely holomorphic trace polynomial from ``{word: coeff}``."""
        out: dict = {}
        for w, c in words.items():
            tw = normalize_trace_word(tuple(w))
            if tw is None:
                continue
            key = ((), (), tw.letters)
            out[key] = out.get(key, 0) + tw.sign * Fraction(c)
        return cls._raw(out)

    def word_terms(self) -> dict:
        """``{word: coeff}`` view; only valid when no t or dt occurs."""
        out = {}
        for (texps, dts, word), c in self._terms.items():
            if texps or dts:
                raise ValueError("trace form carries simplicial coordinates")
            out[word] = c
        return out

    def d(self) -> "TraceForm":
        # d commutes with tr and respects the graded cyclic relation
        return _retrace(_apply_d(self._terms, normalize_words=True))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__


def _retrace(terms: Mapping) -> TraceForm:
    out: dict = {}
    for (texps, dts, word), c in terms.items():
        tw = normalize_trace_word(word)
        if tw is None:
            continue
        key = (texps, dts, tw.letters)
        out[key] = out.get(key, 0) + tw.sign * c
    return TraceForm._raw(out)


def trace(f: Form) -> TraceForm:
    """Apply the trace term by term; even powers of a single 1-form drop out."""
    return _retrace(f._terms)


# ---------------------------------------------------------------------------
# generators


def one() -> Form:
    return Form._raw({_EMPTY: Fraction(1)})


def scalar(c) -> Form:
    return one().scale(c)


def B(i: int) -> Form:
    if i < 1:
        raise ValueError("B_0 is eliminated; indices start at 1")
    return Form._raw({((), (), (i,)): Fraction(1)})


def t(i: int, exponent: int = 1) -> Form:
    if i < 1:
        raise ValueError("t_0 is eliminated; indices start at 1")
    if exponent == 0:
        return one()
    return Form._raw({(((i, exponent),), (), ()): Fraction(1)})


def dt(i: int) -> Form:
    if i < 1:
        raise ValueError("dt_0 is eliminated; indices start at 1")
    return Form._raw({((), (i,), ()): Fraction(1)})


def theta(name: str = "theta") -> Form:
    return Form._raw({((), (), (name,)): Fraction(1)})


# ---------------------------------------------------------------------------
# printing


def _format_word(word: Word) -> str:
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = letter_name(word[i])
        parts.append(name if j - i == 1 else f"{name}^{j - i}")
        i = j
    return " ".join(parts)


def format_coeff(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_key(key: Key, traced: bool) -> str:
    texps, dts, word = key
    parts = []
    for i, e in texps:
        parts.append(f"t{i}" if e == 1 else f"t{i}^{e}")
    if word:
        w = _format_word(word)
        parts.append(f"tr({w})" if traced else w)
    if dts:
        parts.append("∧".join(f"dt{i}" for i in dts))
    return " ".join(parts) if parts else "1"


def format_poly(f: _Poly) -> str:
    if not f:
        return "0"
    traced = isinstance(f, TraceForm)
    out = []
    for n, (key, c) in enumerate(f.sorted_items()):
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        body = format_key(key, traced)
        text = body if mag == 1 else (format_coeff(mag) if body == "1" else f"{format_coeff(mag)} {body}")
        if mag == 1 and body == "1":
            text = "1"
        if n == 0:
            out.append(text if sign == "+" else f"-{text}")
        else:
            out.append(f"{sign} {text}")
    return " ".join(out)


def from_terms(pairs: Iterable[tuple[Key, object]], cls=Form):
    out: dict = {}
    for key, c in pairs:
        out[key] = out.get(key, 0) + Fraction(c)
    return cls._raw(out)
