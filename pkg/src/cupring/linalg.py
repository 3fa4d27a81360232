"""Exact linear algebra over the rationals.

Ranks and determinants use fraction-free (Bareiss) elimination on integer
rows; kernels and canonical row spaces use reduced row echelon form over
``Fraction``.  Nothing here ever touches floating point.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import List, Sequence, Tuple

from .polynomial import Scalar, _norm, as_rational


class QMatrix:
    """Immutable ``rows x cols`` matrix of rationals, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence], cols: int | None = None):
        data = tuple(tuple(as_rational(v) for v in row) for row in entries)
        if cols is None:
            cols = len(data[0]) if data else 0
        if any(len(row) != cols for row in data):
            raise ValueError("ragged matrix")
        self.rows = len(data)
        self.cols = cols
        self.entries = data

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QMatrix":
        return cls([[0] * cols for _ in range(rows)], cols)

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], n)

    def __getitem__(self, ij: Tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Tuple[Scalar, ...]:
        return self.entries[i]

    def transpose(self) -> "QMatrix":
        return QMatrix([list(col) for col in zip(*self.entries)] if self.rows else [], self.rows)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "QMatrix":
        return QMatrix([[self.entries[i][j] for j in cols] for i in rows], len(cols))

    def matvec(self, v: Sequence) -> Tuple[Scalar, ...]:
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(_norm(sum(a * b for a, b in zip(row, v))) for row in self.entries)

    def is_skew(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.entries[i][j] == -self.entries[j][i]
            for i in range(self.rows)
            for j in range(i, self.cols)
        )

    def tolist(self) -> List[List[Scalar]]:
        return [list(r) for r in self.entries]

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        return f"QMatrix({self.tolist()!r})"


def _integer_rows(rows: Sequence[Sequence[Scalar]]) -> List[List[int]]:
    # scaling a row by a nonzero constant changes neither rank nor row space
    out = []
    for row in rows:
        den = 1
        for v in row:
            if type(v) is Fraction:
                den = lcm(den, v.denominator)
        out.append([int(v * den) for v in row])
    return out


def _bareiss(a: List[List[int]]) -> Tuple[int, int]:
    """In-place Bareiss on integer rows; returns (rank, sign-corrected last pivot)."""
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    prev = 1
    rank = 0
    sign = 1
    for col in range(ncols):
        if rank == nrows:
            break
        piv = next((r for r in range(rank, nrows) if a[r][col]), None)
        if piv is None:
            continue
        if piv != rank:
            a[rank], a[piv] = a[piv], a[rank]
            sign = -sign
        p = a[rank][col]
        prow = a[rank]
        for r in range(rank + 1, nrows):
            row = a[r]
            f = row[col]
            for c in range(col + 1, ncols):
                row[c] = (p * row[c] - f * prow[c]) // prev
            row[col] = 0
        prev = p
        rank += 1
    return rank, sign * prev


def matrix_rank(m: QMatrix) -> int:
    """Exact rank via fraction-free elimination."""
    if m.rows == 0 or m.cols == 0:
        return 0
    rank, _ = _bareiss(_integer_rows(m.entries))
    return rank


def determinant(m: QMatrix) -> Scalar:
    """Exact determinant of a square rational matrix."""
    if m.rows != m.cols:
        raise ValueError(f"determinant needs a square matrix, got {m.rows}x{m.cols}")
    n = m.rows
    if n == 0:
        return 1
    scale = Fraction(1)
    rows = []
    for row in m.entries:
        den = 1
        for v in row:
            if type(v) is Fraction:
                den = lcm(den, v.denominator)
        scale /= den
        rows.append([int(v * den) for v in row])
    rank, last = _bareiss(rows)
    if rank < n:
        return 0
    return _norm(last * scale)


def rref(rows: Sequence[Sequence], ncols: int) -> Tuple[List[List[Scalar]], List[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    a = [[Fraction(v) for v in row] for row in rows]
    pivots: List[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [v * inv for v in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    return [[_norm(v) for v in row] for row in a[:r]], pivots


def kernel_basis(m: QMatrix) -> List[Tuple[Scalar, ...]]:
    """Basis of the right null space, in reduced row echelon form.

    >>> kernel_basis(QMatrix([[0, 0, 0], [0, 0, -1], [0, 1, 0]]))
    [(1, 0, 0)]
    """
    n = m.cols
    red, pivots = rref(m.entries, n)
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for f in free:
        v: List[Scalar] = [0] * n
        v[f] = 1
        for row, p in zip(red, pivots):
            v[p] = _norm(-row[f])
        basis.append(v)
    if not basis:
        return []
    canon, _ = rref(basis, n)
    return [tuple(v) for v in canon]


def nonsingular_submatrix(m: QMatrix, size: int) -> Tuple[Tuple[int, ...], Tuple[int, ...]] | None:
    """Row and column indices of some ``size x size`` invertible submatrix.

    Rows are the pivot rows of the transpose, columns the pivot columns of the
    chosen rows, so the choice is deterministic.  Returns None if rank < size.
    """
    _, row_piv = rref(m.transpose().entries, m.rows)
    if len(row_piv) < size:
        return None
    rows = tuple(row_piv[:size])
    _, col_piv = rref([m.entries[i] for i in rows], m.cols)
    return rows, tuple(col_piv[:size])
