"""Exact dense linear algebra over the rationals.

Matrices are small (a few dozen rows at most), so everything here is plain
Python on ``int``/``Fraction`` entries. Ranks use fraction-free (Bareiss)
elimination; kernels and solves go through a reduced row echelon form.
"""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


class Matrix:
    """An ``nrows x ncols`` matrix with exact entries.

    The shape is stored explicitly so that empty matrices (``0 x k`` or
    ``k x 0``) keep their dimensions through products and transposes.
    """

    __slots__ = ("nrows", "ncols", "rows")

    def __init__(self, nrows: int, ncols: int, rows: Sequence[Sequence] | None = None):
        self.nrows = nrows
        self.ncols = ncols
        if rows is None:
            self.rows = [[0] * ncols for _ in range(nrows)]
        else:
            if len(rows) != nrows or any(len(r) != ncols for r in rows):
                raise ValueError(f"rows do not match shape {nrows}x{ncols}")
            self.rows = [list(r) for r in rows]

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(n, n, [[1 if r == c else 0 for c in range(n)] for r in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Matrix:
        return cls(nrows, ncols)

    @classmethod
    def from_columns(cls, nrows: int, columns: Sequence[Sequence]) -> Matrix:
        return cls(nrows, len(columns), [[col[r] for col in columns] for r in range(nrows)])

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def column(self, c: int) -> list:
        return [row[c] for row in self.rows]

    def columns(self) -> list[list]:
        return [self.column(c) for c in range(self.ncols)]

    def transpose(self) -> Matrix:
        return Matrix(self.ncols, self.nrows, [self.column(c) for c in range(self.ncols)])

    @property
    def T(self) -> Matrix:
        return self.transpose()

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.columns()
        out = []
        for row in self.rows:
            out.append([sum(a * b for a, b in zip(row, col) if a and b) for col in cols])
        return Matrix(self.nrows, other.ncols, out)

    def __mul__(self, scalar) -> Matrix:
        return Matrix(self.nrows, self.ncols, [[scalar * x for x in r] for r in self.rows])

    __rmul__ = __mul__

    def __add__(self, other: Matrix) -> Matrix:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")
        return Matrix(
            self.nrows,
            self.ncols,
            [[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
        )

    def __neg__(self) -> Matrix:
        return self * -1

    def __sub__(self, other: Matrix) -> Matrix:
        return self + (-other)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.shape == other.shape and all(
            a == b for r, s in zip(self.rows, other.rows) for a, b in zip(r, s)
        )

    def __hash__(self):
        return hash((self.nrows, self.ncols, tuple(tuple(r) for r in self.rows)))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.rows for x in r)

    def hstack(self, other: Matrix) -> Matrix:
        if self.nrows != other.nrows:
            raise ValueError("row counts differ")
        return Matrix(self.nrows, self.ncols + other.ncols, [r + s for r, s in zip(self.rows, other.rows)])

    def vstack(self, other: Matrix) -> Matrix:
        if self.ncols != other.ncols:
            raise ValueError("column counts differ")
        return Matrix(self.nrows + other.nrows, self.ncols, self.rows + other.rows)

    def select_columns(self, idx: Sequence[int]) -> Matrix:
        return Matrix(self.nrows, len(idx), [[r[c] for c in idx] for r in self.rows])

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(x) for x in r) for r in self.rows)
        return f"Matrix({self.nrows}x{self.ncols}: [{body}])"


def block_matrix(blocks: Sequence[Sequence[Matrix]]) -> Matrix:
    """Assemble a matrix from a grid of blocks with consistent shapes."""
    if not blocks:
        return Matrix(0, 0)
    out = None
    for block_row in blocks:
        row = block_row[0]
        for b in block_row[1:]:
            row = row.hstack(b)
        out = row if out is None else out.vstack(row)
    return out


def _integer_rows(a: Matrix) -> list[list[int]]:
    rows = []
    for r in a.rows:
        den = 1
        for x in r:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = lcm(den, x.denominator)
        rows.append([int(x * den) for x in r])
    return rows


def rank(a: Matrix) -> int:
    """Rank by Bareiss fraction-free elimination on integer rows."""
    if a.nrows == 0 or a.ncols == 0:
        return 0
    m = _integer_rows(a)
    nrows, ncols = a.nrows, a.ncols
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((k for k in range(r, nrows) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        for k in range(r + 1, nrows):
            f = m[k][c]
            row_k = m[k]
            row_r = m[r]
            for cc in range(c, ncols):
                row_k[cc] = (p * row_k[cc] - f * row_r[cc]) // prev
        prev = p
        r += 1
        if r == nrows:
            break
    return r


def rref(a: Matrix) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    m = [[Fraction(x) for x in r] for r in a.rows]
    pivots: list[int] = []
    r = 0
    for c in range(a.ncols):
        piv = next((k for k in range(r, a.nrows) if m[k][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        p = m[r][c]
        if p != 1:
            m[r] = [x / p for x in m[r]]
        for k in range(a.nrows):
            if k != r and m[k][c] != 0:
                f = m[k][c]
                m[k] = [x - f * y for x, y in zip(m[k], m[r])]
        pivots.append(c)
        r += 1
        if r == a.nrows:
            break
    return m[:r], pivots


def _clear_denominators(v: list) -> list:
    den = 1
    for x in v:
        if isinstance(x, Fraction):
            den = lcm(den, x.denominator)
    return [int(x * den) for x in v]


def nullspace(a: Matrix) -> Matrix:
    """Basis of the right kernel, as the columns of an integer matrix."""
    rows, pivots = rref(a)
    free = [c for c in range(a.ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * a.ncols
        v[f] = Fraction(1)
        for row, p in zip(rows, pivots):
            v[p] = -row[f]
        basis.append(_clear_denominators(v))
    return Matrix.from_columns(a.ncols, basis)


def column_space(a: Matrix) -> Matrix:
    """A basis of the column space, chosen among the columns of ``a``."""
    _, pivots = rref(a)
    return a.select_columns(pivots)


def extend_to_basis(sub: Matrix) -> list[int]:
    """Indices of standard basis vectors completing ``span(sub)`` to the whole space.

    ``sub`` need not have independent columns.
    """
    n = sub.nrows
    _, pivots = rref(sub.hstack(Matrix.identity(n)))
    return [p - sub.ncols for p in pivots if p >= sub.ncols]


def solve(a: Matrix, b: Matrix) -> Matrix:
    """Return ``x`` with ``a @ x == b``; ``a`` must have independent columns.

    Raises ``ValueError`` if the system is inconsistent.
    """
    if a.nrows != b.nrows:
        raise ValueError("row counts differ")
    rows, pivots = rref(a.hstack(b))
    if len(pivots) != rank(a) or any(p >= a.ncols for p in pivots):
        raise ValueError("system is inconsistent")
    if len(pivots) != a.ncols:
        raise ValueError("coefficient matrix has dependent columns")
    return Matrix(a.ncols, b.ncols, [row[a.ncols:] for row in rows])
