"""Lifting ``tr(expat^k)`` to a closed element of the Čech–de Rham total complex.

Sign convention: the total differential on bidegree ``(p, q)`` is
``D = δ + (-1)^p d``.  For a tuple ``(c_1, ..., c_k)`` with ``c_i`` of
bidegree ``(i, 2k - i)`` closedness means

* ``δ c_k = 0``,
* ``δ c_{i-1} = (-1)^(i+1) d c_i`` for ``2 <= i <= k``,
* ``d c_1 = 0``.

Each ``c_{i-1}`` is found by enumerating the cyclic trace-monomial basis of
its bidegree, writing ``δ`` as an exact rational matrix and solving.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from atiyah import linalg
from atiyah.algebra import TraceForm, normalize_trace_word
from atiyah.cech import CechCochain, atiyah_cocycle, cech_delta

SIGN_CONVENTION = "delta_plus_(-1)^p_d"
DEFAULT_MAX_K = 4


class Infeasible(Exception):
    """Raised when ``δ c = target`` has no solution in the requested bidegree."""

    def __init__(self, target: CechCochain, p: int):
        super().__init__(f"no ({p}, {target.q}) cochain has the requested Čech coboundary")
        self.target = target
        self.p = p


def staircase_sign(i: int) -> int:
    """``s_i`` in ``δ c_{i-1} = s_i d c_i`` for the convention ``D = δ + (-1)^p d``."""
    return 1 if i % 2 else -1


@dataclass(frozen=True)
class TraceBasis:
    p: int
    q: int
    elements: tuple

    def index(self) -> dict:
        return {w: n for n, w in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)


@lru_cache(maxsize=None)
def enumerate_trace_basis(p: int, q: int) -> TraceBasis:
    """All non-zero cyclic classes of length-``q`` words in ``B_1..B_p``, lex ordered."""
    if p < 1 or q < 1:
        raise ValueError("basis needs p >= 1 and q >= 1")
    found = set()
    for word in product(range(1, p + 1), repeat=q):
        tw = normalize_trace_word(word)
        if tw is not None:
            found.add(tw.letters)
    return TraceBasis(p, q, tuple(sorted(found)))


@dataclass(frozen=True)
class DeltaMatrix:
    domain: TraceBasis
    codomain: TraceBasis
    columns: tuple  # columns[j] = {row: Fraction}

    def apply(self, vector: dict) -> dict:
        return linalg.apply(list(self.columns), vector)


@lru_cache(maxsize=None)
def delta_matrix(p: int, q: int) -> DeltaMatrix:
    dom = enumerate_trace_basis(p, q)
    cod = enumerate_trace_basis(p + 1, q)
    rows = cod.index()
    cols = []
    for w in dom.elements:
        image = cech_delta(CechCochain.from_words(p, q, {w: 1}))
        cols.append({rows[v]: c for v, c in image.words().items()})
    return DeltaMatrix(dom, cod, tuple(cols))


def to_vector(c: CechCochain, basis: TraceBasis) -> dict:
    idx = basis.index()
    return {idx[w]: v for w, v in c.words().items()}


def from_vector(vec: dict, basis: TraceBasis) -> CechCochain:
    return CechCochain.from_words(basis.p, basis.q, {basis.elements[j]: v for j, v in vec.items()})


@dataclass
class StepReport:
    p: int
    q: int
    domain_size: int
    codomain_size: int
    rank: int
    kernel_dimension: int


def solve_lift_step(target: CechCochain, p: int, report: list | None = None) -> CechCochain:
    """Some ``c`` of bidegree ``(p, target.q)`` with ``δ c = target``.

    Free variables of the elimination are set to zero.  Raises
    :class:`Infeasible` when no solution exists.
    """
    if target.p != p + 1:
        raise ValueError(f"target has Čech degree {target.p}, expected {p + 1}")
    if p < 1 or target.q < 1:
        raise ValueError("lift steps need p >= 1 and q >= 1")
    q = target.q
    mat = delta_matrix(p, q)
    b = to_vector(target, mat.codomain)
    x, ech = linalg.solve(list(mat.columns), len(mat.codomain), b)
    if report is not None:
        report.append(StepReport(p, q, len(mat.domain), len(mat.codomain), ech.rank, ech.nullity))
    if x is None:
        raise Infeasible(target, p)
    return from_vector(x, mat.domain)


def delta_kernel(p: int, q: int) -> list:
    """Basis of ``ker δ`` on ``(p, q)`` cochains."""
    mat = delta_matrix(p, q)
    return [from_vector(v, mat.domain) for v in linalg.kernel_basis(list(mat.columns), len(mat.codomain))]


@dataclass
class LiftTuple:
    """Components ``c_1..c_k``; ``components[i-1]`` has bidegree ``(i, 2k-i)``."""

    k: int
    components: list
    sign_convention: str = SIGN_CONVENTION
    steps: list = field(default_factory=list, compare=False)

    def __post_init__(self):
        if len(self.components) != self.k:
            raise ValueError("a lift tuple carries exactly k components")
        for i, c in enumerate(self.components, start=1):
            if (c.p, c.q) != (i, 2 * self.k - i):
                raise ValueError(f"component {i} has bidegree {(c.p, c.q)}, expected {(i, 2 * self.k - i)}")

    def component(self, p: int) -> CechCochain:
        """The Čech-degree-``p`` component; zero outside ``1..k``."""
        if 1 <= p <= self.k:
            return self.components[p - 1]
        return CechCochain.zero(p, 2 * self.k - p) if 0 <= p <= 2 * self.k else None

    def __eq__(self, other):
        if not isinstance(other, LiftTuple):
            return NotImplemented
        return (self.k, self.components, self.sign_convention) == (
            other.k,
            other.components,
            other.sign_convention,
        )


def lift_exponential_atiyah(k: int, max_k: int = DEFAULT_MAX_K) -> LiftTuple:
    if not 1 <= k <= max_k:
        raise ValueError(f"k must lie in 1..{max_k}")
    comps = {k: atiyah_cocycle(k)}
    steps: list = []
    for i in range(k, 1, -1):
        target = comps[i].d().scale(staircase_sign(i))
        comps[i - 1] = solve_lift_step(target, i - 1, steps)
    if not comps[1].d().is_zero():
        raise RuntimeError("d c_1 does not vanish; lift is inconsistent")
    return LiftTuple(k, [comps[i] for i in range(1, k + 1)], steps=steps)


@dataclass
class ClosureReport:
    closed: bool
    residuals: dict  # label -> TraceForm residual (zero when the square closes)
    sign_convention: str = SIGN_CONVENTION

    def lines(self) -> list:
        out = [f"sign convention: D = δ + (-1)^p d ({self.sign_convention})"]
        for label, r in self.residuals.items():
            out.append(f"{label}: {'0' if r.is_zero() else r}")
        out.append(f"closed: {'true' if self.closed else 'false'}")
        return out


def staircase_residuals(components: list, signs=None) -> dict:
    """Residuals of every square; ``signs[i]`` overrides ``s_i`` (for foreign conventions)."""
    k = len(components)
    signs = signs or {}
    res = {}
    res[f"delta c_{k}"] = cech_delta(components[-1]).value
    for i in range(k, 1, -1):
        s = signs.get(i, staircase_sign(i))
        lhs = cech_delta(components[i - 2]).value
        rhs = components[i - 1].d().value.scale(s)
        res[f"delta c_{i - 1} - ({s:+d}) d c_{i}"] = lhs - rhs
    res["d c_1"] = components[0].d().value
    return res


def verify_total_closed(t: LiftTuple) -> ClosureReport:
    res = staircase_residuals(t.components)
    return ClosureReport(all(r.is_zero() for r in res.values()), res, t.sign_convention)


def total_differential(t: LiftTuple) -> dict:
    """``D t`` by bidegree, under ``D = δ + (-1)^p d``; zero iff closed."""
    k = t.k
    out = {}
    for p in range(0, k + 2):
        q = 2 * k + 1 - p
        acc = TraceForm()
        if 1 <= p - 1 <= k:
            acc = acc + cech_delta(t.component(p - 1)).value
        if 1 <= p <= k:
            d = t.component(p).d().value
            acc = acc + (d if p % 2 == 0 else -d)
        out[(p, q)] = acc
    return out
