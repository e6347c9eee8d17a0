"""JSON, text and LaTeX renderings of cochains and lift tuples.

JSON terms look like ``{"coeff":"1/3","t":[],"dt":[],"word":[1,1,1]}``;
coefficients are always written ``num/den`` in lowest terms.
"""

from __future__ import annotations

import json
from fractions import Fraction

from atiyah.algebra import TraceForm, format_poly, letter_name
from atiyah.cech import CechCochain
from atiyah.lift import LiftTuple


def coeff_to_str(c) -> str:
    c = Fraction(c)
    return f"{c.numerator}/{c.denominator}"


def coeff_from_str(s: str) -> Fraction:
    if not isinstance(s, str) or "/" not in s:
        raise ValueError(f"coefficient must be a 'num/den' string, got {s!r}")
    num, den = s.split("/")
    c = Fraction(int(num), int(den))
    if coeff_to_str(c) != s:
        raise ValueError(f"coefficient {s!r} is not in lowest terms")
    return c


def terms_to_json(f) -> list:
    out = []
    for (texps, dts, word), c in f.sorted_items():
        out.append(
            {
                "coeff": coeff_to_str(c),
                "t": [[i, e] for i, e in texps],
                "dt": list(dts),
                "word": list(word),
            }
        )
    return out


def terms_from_json(terms: list, cls=TraceForm):
    out: dict = {}
    for term in terms:
        if set(term) != {"coeff", "t", "dt", "word"}:
            raise ValueError(f"malformed term {term!r}")
        key = (
            tuple((int(i), int(e)) for i, e in term["t"]),
            tuple(int(i) for i in term["dt"]),
            tuple(x if isinstance(x, str) else int(x) for x in term["word"]),
        )
        if key in out:
            raise ValueError(f"duplicate term {term!r}")
        out[key] = coeff_from_str(term["coeff"])
    return cls(out)


def cochain_to_json(c: CechCochain) -> dict:
    return {"p": c.p, "q": c.q, "terms": terms_to_json(c.value)}


def cochain_from_json(obj: dict) -> CechCochain:
    return CechCochain(int(obj["p"]), int(obj["q"]), terms_from_json(obj["terms"]))


def lift_to_json(t: LiftTuple) -> dict:
    return {
        "k": t.k,
        "components": [cochain_to_json(c) for c in t.components],
        "sign_convention": t.sign_convention,
    }


def lift_from_json(obj: dict) -> LiftTuple:
    comps = [cochain_from_json(c) for c in obj["components"]]
    return LiftTuple(int(obj["k"]), comps, obj["sign_convention"])


def dumps(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, separators=(",", ":"))


def serialize_lift(t: LiftTuple) -> str:
    return dumps(lift_to_json(t))


def parse_lift(text: str) -> LiftTuple:
    return lift_from_json(json.loads(text))


# ---------------------------------------------------------------------------
# text and LaTeX


def lift_text(t: LiftTuple, header: str = "lift") -> list:
    out = [f"{header} k = {t.k}", f"sign convention: {t.sign_convention}"]
    for p in range(0, 2 * t.k + 1):
        c = t.component(p)
        out.append(f"({p}, {2 * t.k - p}): {format_poly(c.value)}")
    return out


def _latex_letter(x) -> str:
    if isinstance(x, int):
        return f"B_{{{x}}}"
    return rf"\mathrm{{{letter_name(x)}}}"


def _latex_word(word: tuple) -> str:
    parts = []
    i = 0
    while i < len(word):
        j = i
        while j < len(word) and word[j] == word[i]:
            j += 1
        name = _latex_letter(word[i])
        parts.append(name if j - i == 1 else f"{name}^{{{j - i}}}")
        i = j
    return " ".join(parts)


def _latex_coeff(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def latex_poly(f) -> str:
    if not f:
        return "0"
    traced = isinstance(f, TraceForm)
    out = []
    for n, ((texps, dts, word), c) in enumerate(f.sorted_items()):
        body = []
        for i, e in texps:
            body.append(f"t_{{{i}}}" if e == 1 else f"t_{{{i}}}^{{{e}}}")
        if word:
            w = _latex_word(word)
            body.append(rf"\operatorname{{tr}}({w})" if traced else w)
        if dts:
            body.append(r" \wedge ".join(f"dt_{{{i}}}" for i in dts))
        text = " ".join(body)
        mag = abs(c)
        if mag != 1 or not text:
            text = f"{_latex_coeff(mag)} {text}".strip()
        if n == 0:
            out.append(text if c > 0 else f"-{text}")
        else:
            out.append(f"{'+' if c > 0 else '-'} {text}")
    return " ".join(out)


def lift_latex(t: LiftTuple) -> str:
    parts = []
    for p in range(0, 2 * t.k + 1):
        parts.append(rf"\underbrace{{{latex_poly(t.component(p).value)}}}_{{p={p}}}")
    return "\\Big(\n  " + ",\n  ".join(parts) + "\n\\Big)"


def cochain_text(c: CechCochain) -> str:
    return f"({c.p}, {c.q}): {format_poly(c.value)}"


def cochain_latex(c: CechCochain) -> str:
    return rf"\underbrace{{{latex_poly(c.value)}}}_{{p={c.p}}}"
