"""Cross-checks between the bicomplex lift and the simplicial construction."""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from atiyah import linalg
from atiyah.cech import atiyah_cocycle, permutation_sign, skew_symmetrise
from atiyah.freealg import FreeWordPolynomial
from atiyah.lift import DEFAULT_MAX_K, lift_exponential_atiyah
from atiyah.simplicial import simplicial_atiyah_cochain, simplicial_level

__all__ = [
    "FreeWordPolynomial",
    "AgreementReport",
    "agreement_check",
    "identity_sides",
    "in_skew_eigenspaces",
    "transposition_action",
    "leading_coefficient_check",
    "leading_coefficient_law",
    "permutation_identity_check",
    "skew_eigenspace_dimension",
]

MAX_IDENTITY_K = 5


def _expand(eta, k: int, chained: bool) -> dict:
    """``sgn(η) ∏ (x_η(i) - x_η(0 or i-1))`` as a word map."""
    partial = {(): permutation_sign(eta)}
    for i in range(1, k + 1):
        pos, neg = eta[i], (eta[i - 1] if chained else eta[0])
        nxt: dict = {}
        for w, c in partial.items():
            nxt[w + (pos,)] = nxt.get(w + (pos,), 0) + c
            nxt[w + (neg,)] = nxt.get(w + (neg,), 0) - c
        partial = nxt
    return partial


def _sides_for(args):
    k, perms = args
    a: dict = {}
    b: dict = {}
    for eta in perms:
        for total, chained in ((a, False), (b, True)):
            for w, c in _expand(eta, k, chained).items():
                total[w] = total.get(w, 0) + c
    return FreeWordPolynomial(a), FreeWordPolynomial(b)


def identity_sides(k: int, jobs: int = 1) -> tuple:
    """``A = Σ sgn(η) ∏ (x_η(i) - x_η(0))`` and ``B = Σ sgn(η) ∏ (x_η(i) - x_η(i-1))``."""
    if k < 1:
        raise ValueError("k must be at least 1")
    perms = list(permutations(range(k + 1)))
    if jobs <= 1:
        return _sides_for((k, perms))
    chunks = [perms[n::jobs] for n in range(jobs)]
    a = FreeWordPolynomial()
    b = FreeWordPolynomial()
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for pa, pb in pool.map(_sides_for, [(k, c) for c in chunks]):
            a = a + pa
            b = b + pb
    return a, b


def permutation_identity_check(k: int, jobs: int = 1) -> bool:
    a, b = identity_sides(k, jobs)
    return a == b


def transposition_action(poly: FreeWordPolynomial, p: int, q: int) -> FreeWordPolynomial:
    return poly.relabel(lambda x: q if x == p else p if x == q else x)


def in_skew_eigenspaces(poly: FreeWordPolynomial, k: int) -> bool:
    """Whether every transposition ``x_p <-> x_q`` acts by ``-1``."""
    for p in range(k + 1):
        for q in range(p + 1, k + 1):
            if transposition_action(poly, p, q) != -poly:
                return False
    return True


def skew_eigenspace_dimension(k: int) -> int:
    """Dimension of the common (-1)-eigenspace of all transpositions on the span of
    degree-``k`` words using ``k`` distinct letters out of ``x_0..x_k``."""
    if not 1 <= k <= 4:
        raise ValueError("k must lie in 1..4")
    words = list(permutations(range(k + 1), k))
    index = {w: n for n, w in enumerate(words)}
    # constraint rows: (σ + 1) v = 0 for every transposition σ
    cols = [dict() for _ in words]
    row = 0
    for p in range(k + 1):
        for q in range(p + 1, k + 1):
            swap = {p: q, q: p}
            for w in words:
                image = tuple(swap.get(x, x) for x in w)
                # coordinate of (σ v + v) at word w: v[σ^{-1} w] + v[w]
                cols[index[image]][row] = cols[index[image]].get(row, 0) + 1
                cols[index[w]][row] = cols[index[w]].get(row, 0) + 1
                row += 1
    ech = linalg.echelon(cols, row)
    return ech.nullity


@dataclass
class AgreementReport:
    k: int
    agrees: bool
    components: list = field(default_factory=list)  # (p, "equal" | "equal after Alt" | "differ")

    def lines(self) -> list:
        out = [f"k = {self.k}"]
        for p, status in self.components:
            out.append(f"  Čech degree {p}: {status}")
        out.append(f"agreement (top component after skew-symmetrisation): {'true' if self.agrees else 'false'}")
        return out


def agreement_check(k: int, max_k: int = DEFAULT_MAX_K, compare_lower: bool = True) -> AgreementReport:
    """Compare the ``(k, k)`` components of both routes after skew-symmetrisation."""
    if not 1 <= k <= max_k:
        raise ValueError(f"k must lie in 1..{max_k}")
    top_s = simplicial_level(k, k)
    top_l = atiyah_cocycle(k)
    agrees = skew_symmetrise(top_s) == skew_symmetrise(top_l)
    report = AgreementReport(k, agrees)
    if compare_lower:
        simp = simplicial_atiyah_cochain(k, max_k)
        lift = lift_exponential_atiyah(k, max_k)
        for p in range(1, k + 1):
            a, b = simp.component(p), lift.component(p)
            if a == b:
                status = "equal"
            elif skew_symmetrise(a) == skew_symmetrise(b):
                status = "equal after Alt"
            else:
                status = "differ"
            report.components.append((p, status))
    else:
        report.components.append((k, "equal" if top_s == top_l else "equal after Alt" if agrees else "differ"))
    return report


def leading_coefficient_law(k: int) -> Fraction:
    """``(k-1)! k! / (2k-1)!``."""
    return Fraction(math.factorial(k - 1) * math.factorial(k), math.factorial(2 * k - 1))


@dataclass
class CoefficientRow:
    k: int
    lift: Fraction
    simplicial: Fraction
    law: Fraction

    @property
    def ok(self) -> bool:
        return abs(self.lift) == self.law and abs(self.simplicial) == self.law


def leading_coefficient_check(k_max: int, max_k: int = DEFAULT_MAX_K) -> list:
    """Coefficient of ``tr(B_1^{2k-1})`` in the Čech-degree-1 component of both routes."""
    if not 1 <= k_max <= max_k:
        raise ValueError(f"k must lie in 1..{max_k}")
    rows = []
    for k in range(1, k_max + 1):
        word = (1,) * (2 * k - 1)
        lift = lift_exponential_atiyah(k, max_k).component(1).words().get(word, Fraction(0))
        simp = simplicial_level(k, 1).words().get(word, Fraction(0))
        rows.append(CoefficientRow(k, lift, simp, leading_coefficient_law(k)))
    return rows
