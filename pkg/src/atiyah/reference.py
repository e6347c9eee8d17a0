"""Reference ``k = 4`` lift polynomials, kept as data for verify mode.

The strings use the monomial basis ``A = B_1``, ``B - A = B_2 - B_1`` and
``C - A = B_3 - B_1``.  The tuple is

    (-1/35 tr A^7, 1/5 tr P26, 1/5 tr P35, tr P44).

As printed, two coefficients make the middle squares fail.  ``CORRECTED``
holds the unique single-coefficient repairs that make the tuple close.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

from atiyah.expr import cochain
from atiyah.lift import LiftTuple, staircase_residuals

P17 = "A^7"

P26 = """5 A^5(B-A) -4 A^4(B-A)^2 + A^3(B-A)A(B-A) + A^3(B-A)^3
-5 A^2(B-A)A(B-A)^2 -4 A^2(B-A)^2A(B-A) -4 A^2(B-A)^4
+1/3 (A(B-A))^3 + A(B-A)A(B-A)^3 + A(B-A)^5"""

P35 = """13/5 A^5 +13 A^4(B-A) +5 A^3(B-A)^2 +5 A^3(B-A)(C-A)
+3 A^3(C-A)(B-A) +4 A^2(B-A)A(B-A) +4 A^2(B-A)A(C-A)
+3 A^2(B-A)^3 - A^2(B-A)^2(C-A) +5A^2(B-A)(C-A)^2
+5A^2(C-A)A(B-A) +2 A^2(C-A)(B-A)^2 + A^2(C-A)(B-A)(C-A)
+3 A^2(C-A)^2(B-A) - A(B-A)A(C-A)(B-A) +5 A(B-A)A(C-A)^2
-5 A(B-A)^2(C-A)(B-A) +5 A(B-A)(C-A)A(C-A) +5 A(B-A)(C-A)^3
+4 (A(C-A))^2(B-A) -2 A(C-A)(B-A)^3 +4 A(C-A)(B-A)^2(C-A)
+ A((C-A)(B-A))^2 +2 A(C-A)^2(B-A)^2 + A(C-A)^2(B-A)(C-A)
+3 A(C-A)^3(B-A)"""

P44 = "A(B-A)(C-B)(D-C)"

VERBATIM = {"P26": P26, "P35": P35}

# single coefficient repairs: A^5(B-A) takes 1, A(B-A)^2(C-A)(B-A) takes -1
CORRECTED = {
    "P26": P26.replace("5 A^5(B-A) -4", "A^5(B-A) -4"),
    "P35": P35.replace("-5 A(B-A)^2(C-A)(B-A)", "- A(B-A)^2(C-A)(B-A)"),
}

SCALES = {1: Fraction(-1, 35), 2: Fraction(1, 5), 3: Fraction(1, 5), 4: Fraction(1)}


def reference_lift(corrected: bool = False) -> LiftTuple:
    """The reference tuple as cochains (no sign convention is implied)."""
    texts = CORRECTED if corrected else VERBATIM
    comps = [
        cochain(P17, 1, 7, SCALES[1]),
        cochain(texts["P26"], 2, 6, SCALES[2]),
        cochain(texts["P35"], 3, 5, SCALES[3]),
        cochain(P44, 4, 4, SCALES[4]),
    ]
    return LiftTuple(4, comps, sign_convention="unspecified")


@dataclass
class StaircaseCheck:
    label: str
    satisfied: bool
    signs: tuple | None  # (s_2, s_3, s_4) of the first closing pattern
    equations: dict = field(default_factory=dict)  # equation -> holds for some sign

    def lines(self) -> list:
        out = [f"{self.label}:"]
        for eq, ok in self.equations.items():
            out.append(f"  {eq}: {'holds' if ok else 'fails'}")
        if self.signs is not None:
            out.append(f"  closing signs (s_2, s_3, s_4) = {self.signs}")
        out.append(f"  staircase satisfied: {'true' if self.satisfied else 'false'}")
        return out


def staircase_check(t: LiftTuple, label: str = "tuple") -> StaircaseCheck:
    """Whether the tuple closes for some choice of the signs ``s_i``.

    The reference tuple carries no explicit convention, so every pattern
    ``δ c_{i-1} = ±d c_i`` is tried.  Each equation is also reported on its own.
    """
    comps = list(t.components)
    k = len(comps)
    equations = {f"delta c_{k} = 0": None, "d c_1 = 0": None}
    for i in range(k, 1, -1):
        equations[f"delta c_{i - 1} = ±d c_{i}"] = False
    closing = None
    for signs in product((1, -1), repeat=k - 1):
        res = staircase_residuals(comps, dict(zip(range(2, k + 1), signs)))
        ok = [r.is_zero() for r in res.values()]
        equations[f"delta c_{k} = 0"] = ok[0]
        equations["d c_1 = 0"] = ok[-1]
        for n, i in enumerate(range(k, 1, -1), start=1):
            if ok[n]:
                equations[f"delta c_{i - 1} = ±d c_{i}"] = True
        if all(ok) and closing is None:
            closing = signs
    return StaircaseCheck(label, closing is not None, closing, equations)


def reference_checks() -> list:
    return [
        staircase_check(reference_lift(False), "reference k=4 tuple (verbatim)"),
        staircase_check(reference_lift(True), "reference k=4 tuple (two coefficients repaired)"),
    ]
