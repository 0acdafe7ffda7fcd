"""Exact sparse linear algebra over a :class:`~osforge.field.FieldContext`.

Vectors are ``dict[int, scalar]`` with no stored zeros.  The workhorse is
:func:`echelon`, an incremental Gaussian elimination that pivots on the first
nonzero column of each incoming row.  Everything else (rank, rref, kernels,
normal forms) is a thin layer on top of it.

The matrices that show up in this package (Cartan differentials, degreewise
spans of ideals) carry two or three nonzeros per row, so a dict-of-rows
elimination without any fill-in heuristics is far faster than dense methods.
"""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction

from .field import FieldContext

Vector = dict


def _reduce_into(row: dict, pivots: Mapping[int, dict], p: int | None) -> dict:
    """Reduce ``row`` in place against an echelon basis until its leading
    column is not a pivot (or it vanishes)."""
    if p is None:
        while row:
            c = min(row)
            pr = pivots.get(c)
            if pr is None:
                return row
            f = row[c]
            for k, v in pr.items():
                nv = row.get(k, 0) - f * v
                if nv:
                    row[k] = nv
                else:
                    row.pop(k, None)
        return row
    while row:
        c = min(row)
        pr = pivots.get(c)
        if pr is None:
            return row
        f = row[c]
        for k, v in pr.items():
            nv = (row.get(k, 0) - f * v) % p
            if nv:
                row[k] = nv
            else:
                row.pop(k, None)
    return row


def _normalize(row: dict, c: int, p: int | None) -> dict:
    lead = row[c]
    if p is None:
        if lead == 1:
            return row
        return {k: Fraction(v) / lead for k, v in row.items()}
    if lead == 1:
        return row
    inv = pow(lead, -1, p)
    return {k: v * inv % p for k, v in row.items()}


def echelon(rows: Iterable[Mapping[int, object]], field: FieldContext,
            pivots: dict[int, dict] | None = None) -> dict[int, dict]:
    """Row echelon basis of the span of ``rows``.

    Returns ``{pivot column: row}`` where each row has leading entry 1 at its
    pivot column and no entries left of it.  Passing ``pivots`` extends an
    existing echelon basis in place.
    """
    p = field.p
    if pivots is None:
        pivots = {}
    for r in rows:
        row = _reduce_into(dict(r), pivots, p)
        if row:
            c = min(row)
            pivots[c] = _normalize(row, c, p)
    return pivots


def rank_of_rows(rows: Iterable[Mapping[int, object]], field: FieldContext) -> int:
    # sparsest rows first keeps fill-in down; the rank does not care about order
    return len(echelon(sorted(rows, key=len), field))


def fully_reduce(pivots: dict[int, dict], field: FieldContext) -> dict[int, dict]:
    """Turn an echelon basis into the reduced one (zeros above every pivot)."""
    p = field.p
    out: dict[int, dict] = {}
    for c in sorted(pivots, reverse=True):
        row = dict(pivots[c])
        for k in [k for k in row if k != c and k in out]:
            f = row.get(k)
            if not f:
                continue
            for kk, v in out[k].items():
                nv = row.get(kk, 0) - f * v
                if p is not None:
                    nv %= p
                if nv:
                    row[kk] = nv
                else:
                    row.pop(kk, None)
        out[c] = row
    return dict(sorted(out.items()))


def reduce_vector(v: Mapping[int, object], reduced: Mapping[int, dict],
                  field: FieldContext) -> dict:
    """Normal form of ``v`` modulo the span of a *reduced* echelon basis.

    The result has no entries in pivot columns.
    """
    p = field.p
    out = dict(v)
    for c in [c for c in v if c in reduced]:
        f = out.pop(c, None)
        if not f:
            continue
        for k, val in reduced[c].items():
            if k == c:
                continue
            nv = out.get(k, 0) - f * val
            if p is not None:
                nv %= p
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
    return out


class SparseMatrix:
    """A ``nrows x ncols`` matrix stored as one dict per row."""

    __slots__ = ("nrows", "ncols", "field", "rows")

    def __init__(self, nrows: int, ncols: int, field: FieldContext,
                 entries: Mapping[tuple[int, int], object] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        self.field = field
        self.rows: list[dict] = [dict() for _ in range(nrows)]
        for (r, c), v in (entries or {}).items():
            self[r, c] = v

    @classmethod
    def from_dense(cls, data, field: FieldContext) -> SparseMatrix:
        data = [list(r) for r in data]
        ncols = len(data[0]) if data else 0
        m = cls(len(data), ncols, field)
        for i, r in enumerate(data):
            if len(r) != ncols:
                raise ValueError("ragged matrix")
            for j, v in enumerate(r):
                m[i, j] = v
        return m

    @classmethod
    def from_rows(cls, rows: list[Mapping[int, object]], ncols: int,
                  field: FieldContext) -> SparseMatrix:
        m = cls(len(rows), ncols, field)
        for i, r in enumerate(rows):
            for j, v in r.items():
                m[i, j] = v
        return m

    def __setitem__(self, key, value):
        r, c = key
        if not (0 <= r < self.nrows and 0 <= c < self.ncols):
            raise IndexError(key)
        value = self.field(value)
        if value:
            self.rows[r][c] = value
        else:
            self.rows[r].pop(c, None)

    def __getitem__(self, key):
        r, c = key
        return self.rows[r].get(c, self.field.zero)

    @property
    def entries(self) -> dict[tuple[int, int], object]:
        return {(i, j): v for i, r in enumerate(self.rows) for j, v in r.items()}

    def to_dense(self) -> list[list]:
        z = self.field.zero
        return [[r.get(j, z) for j in range(self.ncols)] for r in self.rows]

    def transpose(self) -> SparseMatrix:
        t = SparseMatrix(self.ncols, self.nrows, self.field)
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                t.rows[j][i] = v
        return t

    def __eq__(self, other):
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.field, self.rows) == (
            other.nrows, other.ncols, other.field, other.rows)

    def __repr__(self):
        return f"SparseMatrix({self.nrows}x{self.ncols}, nnz={sum(map(len, self.rows))}, {self.field.name})"


def rref(m: SparseMatrix) -> tuple[SparseMatrix, list[int]]:
    """Reduced row echelon form and the (strictly increasing) pivot columns."""
    red = fully_reduce(echelon(m.rows, m.field), m.field)
    out = SparseMatrix(m.nrows, m.ncols, m.field)
    for i, (c, row) in enumerate(red.items()):
        out.rows[i] = dict(row)
    return out, list(red)


def rank(m: SparseMatrix) -> int:
    return rank_of_rows(m.rows, m.field)


def kernel_basis(m: SparseMatrix) -> list[dict]:
    """Basis of ``{x : m x = 0}`` as sparse vectors, one per free column."""
    field = m.field
    red = fully_reduce(echelon(m.rows, field), field)
    free = [j for j in range(m.ncols) if j not in red]
    basis = {f: {f: field.one} for f in free}
    for c, row in red.items():
        for j, v in row.items():
            if j != c:
                basis[j][c] = field.neg(v)
    return [basis[f] for f in free]


def vectors_span_equal(a: list[Mapping], b: list[Mapping], field: FieldContext) -> bool:
    """Whether two lists of vectors span the same subspace."""
    ra = rank_of_rows(a, field)
    return ra == rank_of_rows(b, field) == rank_of_rows(list(a) + list(b), field)
