"""Sparse Gaussian elimination over the rationals.

Matrices are column lists: ``cols[j]`` is a dict ``row -> Fraction``.  Pivoting
is deterministic: columns are scanned left to right and the pivot row is the
smallest remaining row index with a non-zero entry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass
class Echelon:
    """Row-reduced form of a sparse matrix together with the pivot map."""

    nrows: int
    ncols: int
    rows: dict = field(default_factory=dict)  # pivot row index -> reduced row {col: coeff}
    pivots: dict = field(default_factory=dict)  # col -> pivot row index
    zero_rows: list = field(default_factory=list)  # rows reduced to 0 = 0

    @property
    def rank(self) -> int:
        return len(self.pivots)

    @property
    def nullity(self) -> int:
        return self.ncols - self.rank

    @property
    def free_columns(self) -> list:
        return [j for j in range(self.ncols) if j not in self.pivots]


def _to_rows(cols: list, nrows: int) -> dict:
    rows: dict = {}
    for j, col in enumerate(cols):
        for i, v in col.items():
            if not 0 <= i < nrows:
                raise IndexError(f"row index {i} outside 0..{nrows - 1}")
            if v:
                rows.setdefault(i, {})[j] = Fraction(v)
    return rows


def _reduce(rows: dict, ncols: int, nrows: int, rhs: dict | None = None) -> Echelon:
    """Reduced row echelon form.  ``rhs`` (row -> value) is carried along."""
    remaining = dict(rows)
    done: dict = {}
    pivots: dict = {}
    for j in range(ncols):
        candidates = [i for i, r in remaining.items() if r.get(j)]
        if not candidates:
            continue
        p = min(candidates)
        prow = remaining.pop(p)
        inv = 1 / prow[j]
        prow = {c: v * inv for c, v in prow.items()}
        if rhs is not None and p in rhs:
            rhs[p] = rhs[p] * inv
        for target in (remaining, done):
            for i, r in target.items():
                f = r.get(j)
                if not f:
                    continue
                for c, v in prow.items():
                    nv = r.get(c, 0) - f * v
                    if nv:
                        r[c] = nv
                    else:
                        r.pop(c, None)
                if rhs is not None and p in rhs:
                    rhs[i] = rhs.get(i, 0) - f * rhs[p]
        done[p] = prow
        pivots[j] = p
    # rows left in `remaining` are identically zero on the left-hand side
    return Echelon(nrows=nrows, ncols=ncols, rows=done, pivots=pivots, zero_rows=sorted(remaining))


def echelon(cols: list, nrows: int) -> Echelon:
    rows = {i: dict(r) for i, r in _to_rows(cols, nrows).items()}
    return _reduce(rows, len(cols), nrows)


def solve(cols: list, nrows: int, b: dict):
    """Solve ``M x = b`` exactly; ``b`` is a sparse dict ``row -> value``.

    Returns ``(x, echelon)`` with ``x`` a dict ``col -> Fraction`` (free
    variables zero), or ``(None, echelon)`` when the system is inconsistent.
    """
    rows = {i: dict(r) for i, r in _to_rows(cols, nrows).items()}
    rhs = {i: Fraction(v) for i, v in b.items() if v}
    for i in rhs:
        if not 0 <= i < nrows:
            raise IndexError(f"right-hand side row {i} outside 0..{nrows - 1}")
        rows.setdefault(i, {})
    ech = _reduce(rows, len(cols), nrows, rhs)
    for i in ech.zero_rows:
        if rhs.get(i):
            return None, ech
    x = {}
    for j, p in ech.pivots.items():
        v = rhs.get(p, Fraction(0))
        if v:
            x[j] = v
    return x, ech


def kernel_basis(cols: list, nrows: int) -> list:
    """Basis of the null space, one sparse vector per free column."""
    ech = echelon(cols, nrows)
    basis = []
    for f in ech.free_columns:
        vec = {f: Fraction(1)}
        for j, p in ech.pivots.items():
            v = ech.rows[p].get(f)
            if v:
                vec[j] = -v
        basis.append(vec)
    return basis


def apply(cols: list, x: dict) -> dict:
    out: dict = {}
    for j, v in x.items():
        for i, a in cols[j].items():
            out[i] = out.get(i, 0) + a * v
    return {i: v for i, v in out.items() if v}
