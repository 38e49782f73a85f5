"""Exact rational linear algebra on sparse matrices.

Everything downstream (homology dimensions, Mayer-Vietoris bookkeeping,
signatures) reduces to ranks, kernels, images and congruence
diagonalization computed here.  All arithmetic is over `fractions.Fraction`
so there is no tolerance anywhere: a rank is a rank.

Values are immutable after construction and safe to share across threads;
all operations are pure functions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple

Rational = Fraction
# Fraction is always reduced with positive denominator and canonical zero,
# which is exactly the contract the rest of the package relies on.


class DimensionMismatch(ValueError):
    """Shapes or ambient dimensions do not line up."""


class NotSymmetric(ValueError):
    """A symmetric-only operation was fed a non-symmetric matrix."""


def as_rational(x) -> Fraction:
    """Coerce ints, strings like '3/2' and Fractions to Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as a rational number")


class MatrixQ:
    """A rows x cols matrix over Q stored sparsely; zeros are never stored."""

    __slots__ = ("rows", "cols", "_e")

    def __init__(self, rows: int, cols: int, entries: Mapping | None = None):
        if rows < 0 or cols < 0:
            raise DimensionMismatch(f"negative shape ({rows}, {cols})")
        self.rows = rows
        self.cols = cols
        e = {}
        if entries:
            for (i, j), v in entries.items():
                if not (0 <= i < rows and 0 <= j < cols):
                    raise DimensionMismatch(
                        f"entry ({i},{j}) outside {rows}x{cols} matrix")
                v = as_rational(v)
                if v:
                    e[(i, j)] = v
        self._e = e

    @classmethod
    def from_rows(cls, data: Iterable[Iterable]) -> "MatrixQ":
        data = [list(r) for r in data]
        rows = len(data)
        cols = len(data[0]) if data else 0
        entries = {}
        for i, row in enumerate(data):
            if len(row) != cols:
                raise DimensionMismatch("ragged rows")
            for j, v in enumerate(row):
                v = as_rational(v)
                if v:
                    entries[(i, j)] = v
        return cls(rows, cols, entries)

    @classmethod
    def identity(cls, n: int) -> "MatrixQ":
        return cls(n, n, {(i, i): Fraction(1) for i in range(n)})

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "MatrixQ":
        return cls(rows, cols)

    def entry(self, i: int, j: int) -> Fraction:
        return self._e.get((i, j), Fraction(0))

    def items(self):
        return self._e.items()

    @property
    def nnz(self) -> int:
        return len(self._e)

    def is_zero(self) -> bool:
        return not self._e

    def transpose(self) -> "MatrixQ":
        return MatrixQ(self.cols, self.rows,
                       {(j, i): v for (i, j), v in self._e.items()})

    def __matmul__(self, other: "MatrixQ") -> "MatrixQ":
        if self.cols != other.rows:
            raise DimensionMismatch(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        # index other's rows once; boundary-type matrices are very sparse
        rows_of_other = {}
        for (k, j), v in other._e.items():
            rows_of_other.setdefault(k, []).append((j, v))
        acc: dict = {}
        for (i, k), a in self._e.items():
            for j, b in rows_of_other.get(k, ()):
                key = (i, j)
                s = acc.get(key, Fraction(0)) + a * b
                if s:
                    acc[key] = s
                elif key in acc:
                    del acc[key]
        return MatrixQ(self.rows, other.cols, acc)

    def __add__(self, other: "MatrixQ") -> "MatrixQ":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise DimensionMismatch("shape mismatch in addition")
        acc = dict(self._e)
        for key, v in other._e.items():
            s = acc.get(key, Fraction(0)) + v
            if s:
                acc[key] = s
            elif key in acc:
                del acc[key]
        return MatrixQ(self.rows, self.cols, acc)

    def __neg__(self) -> "MatrixQ":
        return MatrixQ(self.rows, self.cols,
                       {k: -v for k, v in self._e.items()})

    def __sub__(self, other: "MatrixQ") -> "MatrixQ":
        return self + (-other)

    def scaled(self, c) -> "MatrixQ":
        c = as_rational(c)
        if not c:
            return MatrixQ.zeros(self.rows, self.cols)
        return MatrixQ(self.rows, self.cols,
                       {k: c * v for k, v in self._e.items()})

    def column(self, j: int) -> dict:
        return {i: v for (i, jj), v in self._e.items() if jj == j}

    def to_rows(self) -> list[list[Fraction]]:
        out = [[Fraction(0)] * self.cols for _ in range(self.rows)]
        for (i, j), v in self._e.items():
            out[i][j] = v
        return out

    def is_symmetric(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(self._e.get((j, i)) == v for (i, j), v in self._e.items())

    def __eq__(self, other) -> bool:
        return (isinstance(other, MatrixQ)
                and (self.rows, self.cols) == (other.rows, other.cols)
                and self._e == other._e)

    __hash__ = None  # mutable dict inside; treat as unhashable

    def __repr__(self) -> str:
        return f"MatrixQ({self.rows}x{self.cols}, nnz={self.nnz})"


def hstack(mats: list[MatrixQ]) -> MatrixQ:
    if not mats:
        raise DimensionMismatch("hstack of nothing")
    rows = mats[0].rows
    if any(m.rows != rows for m in mats):
        raise DimensionMismatch("hstack with differing row counts")
    entries = {}
    off = 0
    for m in mats:
        for (i, j), v in m.items():
            entries[(i, j + off)] = v
        off += m.cols
    return MatrixQ(rows, off, entries)


def vstack(mats: list[MatrixQ]) -> MatrixQ:
    if not mats:
        raise DimensionMismatch("vstack of nothing")
    cols = mats[0].cols
    if any(m.cols != cols for m in mats):
        raise DimensionMismatch("vstack with differing column counts")
    entries = {}
    off = 0
    for m in mats:
        for (i, j), v in m.items():
            entries[(i + off, j)] = v
        off += m.rows
    return MatrixQ(off, cols, entries)


def block_diag(mats: list[MatrixQ]) -> MatrixQ:
    entries = {}
    roff = coff = 0
    for m in mats:
        for (i, j), v in m.items():
            entries[(i + roff, j + coff)] = v
        roff += m.rows
        coff += m.cols
    return MatrixQ(roff, coff, entries)


# ---------------------------------------------------------------------------
# elimination engine

def _sparse_rows(m: MatrixQ) -> list[dict]:
    rows = [dict() for _ in range(m.rows)]
    for (i, j), v in m._e.items():
        rows[i][j] = v
    return rows


def _eliminate(rows: list[dict],
               avoid: frozenset = frozenset()) -> tuple[list[tuple[int, dict]], list[dict]]:
    """Forward elimination on sparse rows.

    Returns (pivots, leftovers): pivots as (pivot column, row dict) pairs in
    selection order, and the rows whose support ended up entirely inside
    `avoid` (columns excluded from pivoting; used for augmented solves).
    Pivots are chosen Markowitz-style - a sparsest column first, then the
    sparsest row holding it - which keeps fill-in down on boundary matrices.
    Ties break on index, so the result is deterministic and independent of
    the input dict iteration order.
    """
    live = {r: row for r, row in enumerate(rows) if row}
    col_index: dict[int, set[int]] = {}
    for r, row in live.items():
        for c in row:
            if c not in avoid:
                col_index.setdefault(c, set()).add(r)

    pivots: list[tuple[int, dict]] = []
    while col_index:
        c = min(col_index, key=lambda cc: (len(col_index[cc]), cc))
        holders = col_index[c]
        r = min(holders, key=lambda rr: (len(live[rr]), rr))
        prow = live.pop(r)
        for cc in prow:
            if cc in avoid:
                continue
            col_index[cc].discard(r)
            if not col_index[cc]:
                del col_index[cc]
        pv = prow[c]
        for rr in sorted(col_index.get(c, ())):
            row = live[rr]
            f = row[c] / pv
            for cc, v in prow.items():
                nv = row.get(cc, Fraction(0)) - f * v
                if nv:
                    if cc not in row and cc not in avoid:
                        col_index.setdefault(cc, set()).add(rr)
                    row[cc] = nv
                elif cc in row:
                    del row[cc]
                    if cc not in avoid:
                        col_index[cc].discard(rr)
                        if not col_index[cc]:
                            del col_index[cc]
            if not row:
                del live[rr]
        pivots.append((c, prow))
    return pivots, [row for row in live.values() if row]


def rank(m: MatrixQ) -> int:
    """Rank over Q, exact."""
    pivots, _ = _eliminate(_sparse_rows(m))
    return len(pivots)


class Subspace:
    """A subspace of Q^ambient_dim given by an independent list of vectors.

    Vectors are stored as sparse {index: value} dicts.
    """

    __slots__ = ("ambient_dim", "basis")

    def __init__(self, ambient_dim: int, basis: Iterable[Mapping] | None = None,
                 _trusted: bool = False):
        self.ambient_dim = ambient_dim
        vecs = []
        for v in basis or ():
            vec = {}
            for i, x in v.items():
                if not (0 <= i < ambient_dim):
                    raise DimensionMismatch(
                        f"coordinate {i} outside ambient dimension {ambient_dim}")
                x = as_rational(x)
                if x:
                    vec[i] = x
            vecs.append(vec)
        self.basis = tuple(vecs)
        if not _trusted and vecs:
            if rank(self.as_matrix()) != len(vecs):
                raise ValueError("basis vectors are linearly dependent")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def as_matrix(self) -> MatrixQ:
        entries = {}
        for j, vec in enumerate(self.basis):
            for i, v in vec.items():
                entries[(i, j)] = v
        return MatrixQ(self.ambient_dim, len(self.basis), entries)

    def __repr__(self) -> str:
        return f"Subspace(dim={self.dim} in Q^{self.ambient_dim})"


def kernel_basis(m: MatrixQ) -> Subspace:
    """A basis of {v : m v = 0}; its size is cols - rank."""
    # a pivot row can only involve its own pivot column, later-chosen pivot
    # columns and free columns, so back-substitution must run in reverse
    # chronological order of pivot selection
    pivots, _ = _eliminate(_sparse_rows(m))
    pivot_set = {c for c, _ in pivots}
    free_cols = [j for j in range(m.cols) if j not in pivot_set]
    vecs = []
    for f in free_cols:
        x = {f: Fraction(1)}
        for c, row in reversed(pivots):
            s = Fraction(0)
            for cc, v in row.items():
                if cc != c and cc in x:
                    s += v * x[cc]
            if s:
                x[c] = -s / row[c]
        vecs.append(x)
    return Subspace(m.cols, vecs, _trusted=True)


def image_basis(m: MatrixQ) -> Subspace:
    """A basis of the column space: the original columns at pivot positions."""
    pivots, _ = _eliminate(_sparse_rows(m))
    cols = sorted(c for c, _ in pivots)
    return Subspace(m.rows, [m.column(j) for j in cols], _trusted=True)


def sum_dim(a: Subspace, b: Subspace) -> int:
    """dim(a + b), exact."""
    if a.ambient_dim != b.ambient_dim:
        raise DimensionMismatch(
            f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")
    entries = {}
    for j, vec in enumerate(a.basis + b.basis):
        for i, v in vec.items():
            entries[(i, j)] = v
    return rank(MatrixQ(a.ambient_dim, a.dim + b.dim, entries))


class IncrementalSpan:
    """Echelon form of a growing family of vectors.

    `add` reduces the vector against the rows held so far and either absorbs
    it (returns True, span grew) or discards it (returns False, dependent).
    Much cheaper than re-running a full elimination per candidate.
    """

    __slots__ = ("ambient_dim", "_rows")

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self._rows: dict[int, dict] = {}  # pivot coordinate -> reduced vector

    def add(self, vec: Mapping) -> bool:
        r = {i: as_rational(v) for i, v in vec.items() if v}
        for i in r:
            if not (0 <= i < self.ambient_dim):
                raise DimensionMismatch("vector outside ambient dimension")
        while r:
            c = min(r)
            pivot = self._rows.get(c)
            if pivot is None:
                self._rows[c] = r
                return True
            f = r[c] / pivot[c]
            for cc, v in pivot.items():
                nv = r.get(cc, Fraction(0)) - f * v
                if nv:
                    r[cc] = nv
                elif cc in r:
                    del r[cc]
        return False

    @property
    def dim(self) -> int:
        return len(self._rows)


def solve(m: MatrixQ, b: Mapping) -> dict | None:
    """One solution x of m x = b (free coordinates 0), or None if insoluble."""
    rows = _sparse_rows(m)
    BCOL = m.cols  # augmented column index
    for i, v in b.items():
        v = as_rational(v)
        if v:
            if not (0 <= i < m.rows):
                raise DimensionMismatch("right-hand side outside row range")
            rows[i][BCOL] = v
    pivots, leftovers = _eliminate(rows, avoid=frozenset({BCOL}))
    if any(row.get(BCOL) for row in leftovers):
        return None
    x: dict = {}
    for c, row in reversed(pivots):
        s = row.get(BCOL, Fraction(0))
        for cc, v in row.items():
            if cc != c and cc != BCOL and cc in x:
                s -= v * x[cc]
        if s:
            x[c] = s / row[c]
    return x


class Signature(NamedTuple):
    pos: int
    neg: int
    null: int


def signature_sym(m: MatrixQ) -> Signature:
    """Inertia (pos, neg, null) of a symmetric matrix by exact congruence.

    Diagonalizes by symmetric row/column operations.  When no nonzero
    diagonal pivot exists, a hyperbolic pair M[i][j] != 0 is converted to a
    usable pivot by the congruence row_i += row_j / col_i += col_j; the pair
    then contributes exactly (1, 1, 0), the standard hyperbolic count.
    """
    if m.rows != m.cols:
        raise NotSymmetric(f"matrix is {m.rows}x{m.cols}, not square")
    if not m.is_symmetric():
        raise NotSymmetric("matrix is not symmetric")
    n = m.rows
    a = [[m.entry(i, j) for j in range(n)] for i in range(n)]
    remaining = list(range(n))
    pos = neg = 0
    while remaining:
        piv = next((i for i in remaining if a[i][i]), None)
        if piv is None:
            hyp = next(((i, j) for i in remaining for j in remaining
                        if i < j and a[i][j]), None)
            if hyp is None:
                break  # all-zero block: the radical
            i, j = hyp
            for k in range(n):  # row_i += row_j, then col_i += col_j
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            piv = i
        remaining.remove(piv)
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        for r in remaining:
            f = a[r][piv] / d
            if not f:
                continue
            for k in range(n):
                a[r][k] -= f * a[piv][k]
            for k in range(n):
                a[k][r] -= f * a[k][piv]
    return Signature(pos, neg, n - pos - neg)
