"""Exact linear algebra over Q(q).

Dense matrices are plain lists of rows; they only appear at module scale
(at most a few dozen rows).  The large systems (center, symmetric forms,
cointegrals) are sparse and go through :class:`SparseEliminator`.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Mapping

from .cyclotomic import CycloNum, CyclotomicField
from .errors import ConsistencyError

Matrix = list[list[CycloNum]]


# dense helpers -----------------------------------------------------------


def zeros(fld: CyclotomicField, rows: int, cols: int) -> Matrix:
    return [[fld.zero] * cols for _ in range(rows)]


def identity(fld: CyclotomicField, n: int) -> Matrix:
    m = zeros(fld, n, n)
    for i in range(n):
        m[i][i] = fld.one
    return m


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = len(b[0])
    zero = a[0][0].field.zero if a[0] else None
    out = []
    for row in a:
        acc = [zero] * cols
        for k, x in enumerate(row):
            if x:
                for j, y in enumerate(b[k]):
                    if y:
                        acc[j] = acc[j] + x * y
        out.append(acc)
    return out


def matvec(a: Matrix, v: list[CycloNum]) -> list[CycloNum]:
    out = []
    for row in a:
        acc = None
        for x, y in zip(row, v):
            if x and y:
                acc = x * y if acc is None else acc + x * y
        out.append(acc if acc is not None else row[0].field.zero)
    return out


def matadd(a: Matrix, b: Matrix, scale=1) -> Matrix:
    return [[x + y * scale if y else x for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def matscale(a: Matrix, c) -> Matrix:
    return [[x * c if x else x for x in row] for row in a]


def kron(a: Matrix, b: Matrix) -> Matrix:
    zero = a[0][0].field.zero
    rb, cb = len(b), len(b[0])
    out = [[zero] * (len(a[0]) * cb) for _ in range(len(a) * rb)]
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            if not x:
                continue
            for k, brow in enumerate(b):
                orow = out[i * rb + k]
                for l, y in enumerate(brow):
                    if y:
                        orow[j * cb + l] = x * y
    return out


def trace(a: Matrix) -> CycloNum:
    acc = a[0][0].field.zero
    for i in range(len(a)):
        if a[i][i]:
            acc = acc + a[i][i]
    return acc


def transpose(a: Matrix) -> Matrix:
    return [list(col) for col in zip(*a)]


def is_zero(a: Matrix) -> bool:
    return not any(x for row in a for x in row)


def matpow(a: Matrix, k: int) -> Matrix:
    result = identity(a[0][0].field, len(a))
    for _ in range(k):
        result = matmul(result, a)
    return result


# sparse elimination ------------------------------------------------------


class SparseEliminator:
    """Incremental reduced row echelon form over Q(q).

    Rows are dicts ``column -> CycloNum``.  Every stored pivot row is kept
    fully reduced against the other pivots, so the nullspace can be read
    off directly.
    """

    def __init__(self, fld: CyclotomicField, columns: Iterable[Hashable]):
        self.field = fld
        self.columns = list(columns)
        self._order = {c: i for i, c in enumerate(self.columns)}
        self.pivots: dict[Hashable, dict[Hashable, CycloNum]] = {}
        # column -> set of pivot columns whose row mentions it
        self._users: dict[Hashable, set] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _reduce(self, row: dict) -> dict:
        row = {c: v for c, v in row.items() if v}
        hits = [c for c in row if c in self.pivots]
        while hits:
            for c in hits:
                v = row.pop(c, None)
                if v is None:
                    continue
                for c2, w in self.pivots[c].items():
                    if c2 == c:
                        continue
                    nv = row.get(c2)
                    nv = -v * w if nv is None else nv - v * w
                    if nv:
                        row[c2] = nv
                    else:
                        row.pop(c2, None)
            hits = [c for c in row if c in self.pivots]
        return row

    def add_row(self, row: Mapping) -> bool:
        """Insert a row; returns True if it increased the rank."""
        row = self._reduce(dict(row))
        if not row:
            return False
        piv = min(row, key=self._order.__getitem__)
        inv = row[piv].inverse()
        row = {c: v * inv for c, v in row.items()}
        row[piv] = self.field.one
        for other in list(self._users.get(piv, ())):
            orow = self.pivots[other]
            v = orow.pop(piv, None)
            if v is None:
                continue
            for c2, w in row.items():
                if c2 == piv:
                    continue
                nv = orow.get(c2)
                nv = -v * w if nv is None else nv - v * w
                if nv:
                    orow[c2] = nv
                    self._users.setdefault(c2, set()).add(other)
                else:
                    orow.pop(c2, None)
        self._users.pop(piv, None)
        self.pivots[piv] = row
        for c2 in row:
            if c2 != piv:
                self._users.setdefault(c2, set()).add(piv)
        return True

    def add_rows(self, rows: Iterable[Mapping]) -> None:
        rows = [r for r in rows if any(v for v in r.values())]
        rows.sort(key=len)
        for r in rows:
            self.add_row(r)

    def free_columns(self) -> list:
        return [c for c in self.columns if c not in self.pivots]

    def nullspace(self) -> list[dict]:
        """Basis of the kernel, one vector per free column."""
        basis = []
        for f in self.free_columns():
            vec = {f: self.field.one}
            for pc, row in self.pivots.items():
                v = row.get(f)
                if v:
                    vec[pc] = -v
            basis.append(vec)
        return basis


def nullspace(fld: CyclotomicField, columns, rows) -> list[dict]:
    elim = SparseEliminator(fld, columns)
    elim.add_rows(rows)
    return elim.nullspace()


def rank(fld: CyclotomicField, columns, rows) -> int:
    elim = SparseEliminator(fld, columns)
    elim.add_rows(rows)
    return elim.rank


def solve(fld: CyclotomicField, columns: list, vectors: Mapping, target: Mapping) -> dict:
    """Find the unique coefficients c with sum_k c_k * vectors[k] = target.

    ``vectors`` maps unknown name -> sparse vector (dict index -> value).
    Raises ConsistencyError if there is no solution or it is not unique.
    """
    rhs = "__rhs__"
    unknowns = list(columns)
    rows: dict = {}
    for k in unknowns:
        for idx, v in vectors[k].items():
            if v:
                rows.setdefault(idx, {})[k] = v
    for idx, v in target.items():
        if v:
            rows.setdefault(idx, {})[rhs] = -v
    elim = SparseEliminator(fld, unknowns + [rhs])
    elim.add_rows(rows.values())
    if rhs in elim.pivots:
        raise ConsistencyError("linear system has no solution")
    free = [c for c in elim.free_columns() if c != rhs]
    if free:
        raise ConsistencyError(f"linear system is underdetermined ({len(free)} free unknowns)")
    out = {}
    for k in unknowns:
        v = elim.pivots[k].get(rhs)
        out[k] = -v if v else fld.zero
    return out
