"""Exact sparse linear algebra over the rationals.

Every matrix in the package is a :class:`RationalMatrix`.  Entries are
``int`` or ``fractions.Fraction`` and are stored sparsely, row by row, because
the matrices that show up here (path actions, cochain differentials,
intertwiner systems) are overwhelmingly zero.  Integral entries stay plain
ints; ``Fraction`` objects are an order of magnitude slower and most
matrices here never leave the integers.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Mapping

SparseVector = dict[int, Fraction]


def _frac(value) -> Fraction | int:
    if isinstance(value, int):
        return value
    if isinstance(value, Fraction):
        return value.numerator if value.denominator == 1 else value
    value = Fraction(value)
    return value.numerator if value.denominator == 1 else value


class RationalMatrix:
    """Sparse ``nrows x ncols`` matrix with exact rational entries."""

    __slots__ = ("nrows", "ncols", "rows", "_cols")

    def __init__(self, nrows: int, ncols: int, rows: Mapping[int, Mapping[int, object]] | None = None):
        if nrows < 0 or ncols < 0:
            raise ValueError("matrix dimensions must be non-negative")
        self.nrows = nrows
        self.ncols = ncols
        self.rows: dict[int, SparseVector] = {}
        self._cols: list[SparseVector] | None = None
        for r, row in (rows or {}).items():
            if not 0 <= r < nrows:
                raise IndexError(f"row {r} out of range for {nrows} rows")
            clean = {}
            for c, v in row.items():
                if not 0 <= c < ncols:
                    raise IndexError(f"column {c} out of range for {ncols} columns")
                if v:
                    clean[c] = _frac(v)
            if clean:
                self.rows[r] = clean

    # construction -----------------------------------------------------

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "RationalMatrix":
        return cls(nrows, ncols)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def from_dense(cls, data: Iterable[Iterable[object]], ncols: int | None = None) -> "RationalMatrix":
        data = [list(r) for r in data]
        if ncols is None:
            ncols = len(data[0]) if data else 0
        if any(len(r) != ncols for r in data):
            raise ValueError("ragged matrix rows")
        return cls(len(data), ncols, {i: dict(enumerate(r)) for i, r in enumerate(data)})

    @classmethod
    def from_entries(cls, nrows: int, ncols: int, entries: Iterable[tuple[int, int, object]]) -> "RationalMatrix":
        """Build from ``(row, col, value)`` triples; repeated positions are summed."""
        rows: dict[int, dict[int, Fraction]] = {}
        for r, c, v in entries:
            row = rows.setdefault(r, {})
            row[c] = row.get(c, 0) + v
        return cls(nrows, ncols, rows)

    @classmethod
    def from_columns(cls, nrows: int, columns: Iterable[Mapping[int, object]]) -> "RationalMatrix":
        columns = list(columns)
        return cls.from_entries(nrows, len(columns), ((r, c, v) for c, col in enumerate(columns) for r, v in col.items()))

    # inspection -------------------------------------------------------

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, key: tuple[int, int]) -> Fraction | int:
        r, c = key
        return self.rows.get(r, {}).get(c, 0)

    def nnz(self) -> int:
        return sum(len(r) for r in self.rows.values())

    def is_zero(self) -> bool:
        return not self.rows

    def tolist(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.ncols for _ in range(self.nrows)]
        for r, row in self.rows.items():
            for c, v in row.items():
                out[r][c] = v
        return out

    def columns(self) -> list[SparseVector]:
        cols: list[SparseVector] = [{} for _ in range(self.ncols)]
        for r, row in self.rows.items():
            for c, v in row.items():
                cols[c][r] = v
        return cols

    def column(self, c: int) -> SparseVector:
        return dict(self._column_cache()[c])

    def _column_cache(self) -> list[SparseVector]:
        # matrices are never mutated after construction, so this is safe to keep
        if self._cols is None:
            self._cols = self.columns()
        return self._cols

    def __eq__(self, other) -> bool:
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.shape == other.shape and self.rows == other.rows

    def __repr__(self) -> str:
        return f"RationalMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()})"

    # arithmetic -------------------------------------------------------

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix.from_entries(
            self.ncols, self.nrows, ((c, r, v) for r, row in self.rows.items() for c, v in row.items())
        )

    @property
    def T(self) -> "RationalMatrix":
        return self.transpose()

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        out: dict[int, SparseVector] = {}
        for r, row in self.rows.items():
            acc: SparseVector = {}
            for k, a in row.items():
                orow = other.rows.get(k)
                if not orow:
                    continue
                for c, b in orow.items():
                    acc[c] = acc.get(c, 0) + a * b
            acc = {c: v for c, v in acc.items() if v}
            if acc:
                out[r] = acc
        return RationalMatrix(self.nrows, other.ncols, out)

    def apply(self, vec: Mapping[int, Fraction]) -> SparseVector:
        """Matrix times a sparse column vector."""
        cols = self._column_cache()
        out: SparseVector = {}
        for c, v in vec.items():
            if not v:
                continue
            for r, a in cols[c].items():
                nv = out.get(r, 0) + a * v
                if nv:
                    out[r] = nv
                else:
                    del out[r]
        return out

    def _combine(self, other: "RationalMatrix", sign: int) -> "RationalMatrix":
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        rows = {r: dict(row) for r, row in self.rows.items()}
        for r, row in other.rows.items():
            target = rows.setdefault(r, {})
            for c, v in row.items():
                target[c] = target.get(c, 0) + sign * v
        return RationalMatrix(self.nrows, self.ncols, rows)

    def __add__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self._combine(other, 1)

    def __sub__(self, other: "RationalMatrix") -> "RationalMatrix":
        return self._combine(other, -1)

    def __neg__(self) -> "RationalMatrix":
        return self.scale(-1)

    def scale(self, k) -> "RationalMatrix":
        k = _frac(k)
        return RationalMatrix(self.nrows, self.ncols, {r: {c: k * v for c, v in row.items()} for r, row in self.rows.items()})

    def submatrix(self, row_idx: list[int], col_idx: list[int]) -> "RationalMatrix":
        rmap = {r: i for i, r in enumerate(row_idx)}
        cmap = {c: j for j, c in enumerate(col_idx)}
        return RationalMatrix.from_entries(
            len(row_idx),
            len(col_idx),
            ((rmap[r], cmap[c], v) for r, row in self.rows.items() if r in rmap for c, v in row.items() if c in cmap),
        )

    # exact elimination ------------------------------------------------

    def rank(self) -> int:
        # eliminate along the shorter side
        if self.ncols < self.nrows:
            return rank_of_rows(self.columns())
        return rank_of_rows(self.rows.values())

    def rref(self) -> tuple[dict[int, SparseVector], list[int]]:
        """Reduced row echelon form: ``{pivot_col: row}`` and the sorted pivot list."""
        return _rref(self.rows.values())

    def nullspace(self) -> list[SparseVector]:
        """Basis of the right kernel, one vector per free column.

        Each basis vector has a 1 at its own free column and 0 at every other
        free column, so the coordinates of a kernel element in this basis are
        simply its entries at the free columns.
        """
        pivots, order = self.rref()
        basis = {free: {free: 1} for free in range(self.ncols) if free not in pivots}
        for p in order:
            for c, v in pivots[p].items():
                if c != p:
                    basis[c][p] = -v
        return list(basis.values())


def _content_normalise(row: dict[int, int]) -> dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    lead = row[min(row)]
    if lead < 0:
        g = -g
    if g not in (0, 1):
        row = {c: v // g for c, v in row.items()}
    return row


def _integer_row(row: Mapping[int, object]) -> dict[int, int]:
    if all(type(v) is int for v in row.values()):
        return {c: v for c, v in row.items() if v}
    den = 1
    for v in row.values():
        v = _frac(v)
        den = den * v.denominator // gcd(den, v.denominator)
    out = {}
    for c, v in row.items():
        v = _frac(v) * den
        if v:
            out[c] = int(v)
    return out


def rank_of_rows(rows: Iterable[Mapping[int, object]]) -> int:
    """Rank by fraction-free elimination over the integers.

    Denominators are cleared row by row; each elimination step replaces
    ``r`` with ``p*r - c*pivot_row`` and divides out the row content, so no
    rational arithmetic is ever needed.
    """
    pivots: dict[int, dict[int, int]] = {}
    for raw in rows:
        row = _integer_row(raw)
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                pivots[lead] = _content_normalise(row)
                break
            a, b = prow[lead], row[lead]
            if a == 1 or a == -1:
                # unit pivot: subtract an integer multiple, no scaling needed
                f = b * a
                for c, v in prow.items():
                    nv = row.get(c, 0) - f * v
                    if nv:
                        row[c] = nv
                    else:
                        del row[c]
                continue
            new = {c: a * v for c, v in row.items()}
            for c, v in prow.items():
                nv = new.get(c, 0) - b * v
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            row = _content_normalise(new) if new else new
    return len(pivots)


def _rref(rows: Iterable[Mapping[int, object]]) -> tuple[dict[int, SparseVector], list[int]]:
    pivots: dict[int, SparseVector] = {}
    for raw in rows:
        row = {c: _frac(v) for c, v in raw.items() if v}
        while row:
            lead = min(row)
            prow = pivots.get(lead)
            if prow is None:
                a = row[lead]
                if a == 1:
                    pivots[lead] = row
                elif a == -1:
                    pivots[lead] = {c: -v for c, v in row.items()}
                else:
                    inv = Fraction(1) / a
                    pivots[lead] = {c: _frac(v * inv) for c, v in row.items()}
                break
            f = row[lead]
            for c, v in prow.items():
                nv = row.get(c, 0) - f * v
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    order = sorted(pivots)
    # back substitution, bottom pivot first; a fully reduced row vanishes at
    # every other pivot, so subtracting it never reintroduces pivot entries
    for q in reversed(order):
        qrow = pivots[q]
        for p in [c for c in qrow if c != q and c in pivots]:
            f = qrow[p]
            for c, v in pivots[p].items():
                nv = qrow.get(c, 0) - f * v
                if nv:
                    qrow[c] = nv
                else:
                    qrow.pop(c, None)
    return pivots, order


def rank(matrix: RationalMatrix) -> int:
    return matrix.rank()


def nullspace(matrix: RationalMatrix) -> list[SparseVector]:
    return matrix.nullspace()


def independent_columns(matrix: RationalMatrix) -> list[int]:
    """Indices of the leftmost maximal set of linearly independent columns."""
    _, order = matrix.rref()
    return order


def block_diagonal(blocks: list[RationalMatrix]) -> RationalMatrix:
    nr = sum(b.nrows for b in blocks)
    nc = sum(b.ncols for b in blocks)
    entries = []
    r0 = c0 = 0
    for b in blocks:
        entries.extend((r0 + r, c0 + c, v) for r, row in b.rows.items() for c, v in row.items())
        r0 += b.nrows
        c0 += b.ncols
    return RationalMatrix.from_entries(nr, nc, entries)


def hstack(blocks: list[RationalMatrix], nrows: int | None = None) -> RationalMatrix:
    if not blocks:
        return RationalMatrix(nrows or 0, 0)
    nr = blocks[0].nrows
    if any(b.nrows != nr for b in blocks):
        raise ValueError("hstack needs equal row counts")
    entries = []
    c0 = 0
    for b in blocks:
        entries.extend((r, c0 + c, v) for r, row in b.rows.items() for c, v in row.items())
        c0 += b.ncols
    return RationalMatrix.from_entries(nr, c0, entries)


def vstack(blocks: list[RationalMatrix], ncols: int | None = None) -> RationalMatrix:
    if not blocks:
        return RationalMatrix(0, ncols or 0)
    nc = blocks[0].ncols
    if any(b.ncols != nc for b in blocks):
        raise ValueError("vstack needs equal column counts")
    entries = []
    r0 = 0
    for b in blocks:
        entries.extend((r0 + r, c, v) for r, row in b.rows.items() for c, v in row.items())
        r0 += b.nrows
    return RationalMatrix.from_entries(r0, nc, entries)
