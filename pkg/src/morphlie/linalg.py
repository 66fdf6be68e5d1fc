"""Exact dense linear algebra over the rationals.

Everything in this package reduces to ranks and kernels of matrices with
Fraction entries, so this module is deliberately dependency-free: stdlib
fractions supply the canonical reduced p/q scalar type, and elimination is
plain Gaussian reduction with exact pivots.  Zero-dimensional matrices
(0 rows or 0 columns) are first-class citizens because top-degree cochain
spaces are routinely empty.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ShapeError, SubspaceViolation

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)

Scalar = int | str | Fraction


def rat(value: Scalar) -> Fraction:
    """Coerce an int, Fraction, or canonical "p/q" string to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def rat_str(value: Fraction) -> str:
    """Serialize a Fraction as "p" or "p/q" with positive denominator."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Matrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "_rows")

    def __init__(self, rows: int, cols: int, entries: Iterable[Scalar] = ()):
        if rows < 0 or cols < 0:
            raise ShapeError(f"matrix dimensions must be nonnegative, got {rows}x{cols}")
        data = [rat(x) for x in entries]
        if not data and rows * cols:
            data = [ZERO] * (rows * cols)
        if len(data) != rows * cols:
            raise ShapeError(f"expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(data)}")
        self.rows = rows
        self.cols = cols
        self._rows = [data[i * cols:(i + 1) * cols] for i in range(rows)]

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Scalar]], cols: int | None = None) -> Matrix:
        n = len(rows)
        if n == 0:
            if cols is None:
                raise ShapeError("from_rows needs an explicit column count for 0 rows")
            return cls(0, cols)
        width = len(rows[0])
        if cols is not None and cols != width:
            raise ShapeError(f"declared {cols} columns but rows have {width}")
        flat: list[Scalar] = []
        for r in rows:
            if len(r) != width:
                raise ShapeError("ragged rows")
            flat.extend(r)
        return cls(n, width, flat)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> Matrix:
        return cls(rows, cols)

    @classmethod
    def identity(cls, n: int) -> Matrix:
        m = cls(n, n)
        for i in range(n):
            m._rows[i][i] = ONE
        return m

    @classmethod
    def column(cls, entries: Sequence[Scalar]) -> Matrix:
        return cls(len(entries), 1, list(entries))

    @classmethod
    def hstack(cls, blocks: Sequence[Matrix]) -> Matrix:
        if not blocks:
            raise ShapeError("hstack of no blocks")
        rows = blocks[0].rows
        if any(b.rows != rows for b in blocks):
            raise ShapeError("hstack blocks disagree on row count")
        out = cls(rows, sum(b.cols for b in blocks))
        for i in range(rows):
            row: list[Fraction] = []
            for b in blocks:
                row.extend(b._rows[i])
            out._rows[i] = row
        return out

    @classmethod
    def vstack(cls, blocks: Sequence[Matrix]) -> Matrix:
        if not blocks:
            raise ShapeError("vstack of no blocks")
        cols = blocks[0].cols
        if any(b.cols != cols for b in blocks):
            raise ShapeError("vstack blocks disagree on column count")
        out = cls(sum(b.rows for b in blocks), cols)
        r = 0
        for b in blocks:
            for i in range(b.rows):
                out._rows[r] = list(b._rows[i])
                r += 1
        return out

    @classmethod
    def block(cls, grid: Sequence[Sequence[Matrix]]) -> Matrix:
        return cls.vstack([cls.hstack(row) for row in grid])

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._rows[i][j]

    def row(self, i: int) -> list[Fraction]:
        return list(self._rows[i])

    def col(self, j: int) -> list[Fraction]:
        return [self._rows[i][j] for i in range(self.rows)]

    def to_lists(self) -> list[list[Fraction]]:
        return [list(r) for r in self._rows]

    def transpose(self) -> Matrix:
        out = Matrix(self.cols, self.rows)
        for i in range(self.rows):
            for j, x in enumerate(self._rows[i]):
                out._rows[j][i] = x
        return out

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matrix):
            return NotImplemented
        return self.rows == other.rows and self.cols == other.cols and self._rows == other._rows

    def __add__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        out = Matrix(self.rows, self.cols)
        for i in range(self.rows):
            out._rows[i] = [a + b for a, b in zip(self._rows[i], other._rows[i])]
        return out

    def __sub__(self, other: Matrix) -> Matrix:
        self._same_shape(other)
        out = Matrix(self.rows, self.cols)
        for i in range(self.rows):
            out._rows[i] = [a - b for a, b in zip(self._rows[i], other._rows[i])]
        return out

    def __neg__(self) -> Matrix:
        out = Matrix(self.rows, self.cols)
        for i in range(self.rows):
            out._rows[i] = [-a for a in self._rows[i]]
        return out

    def scale(self, c: Scalar) -> Matrix:
        c = rat(c)
        out = Matrix(self.rows, self.cols)
        for i in range(self.rows):
            out._rows[i] = [c * a for a in self._rows[i]]
        return out

    def __mul__(self, other: Matrix) -> Matrix:
        """Matrix product, skipping zero entries (differentials are sparse)."""
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        out = Matrix(self.rows, other.cols)
        orows = other._rows
        for i in range(self.rows):
            acc = out._rows[i]
            for k, a in enumerate(self._rows[i]):
                if a:
                    for j, b in enumerate(orows[k]):
                        if b:
                            acc[j] += a * b
        return out

    def apply(self, vector: Sequence[Scalar]) -> list[Fraction]:
        """Multiply by a coordinate vector, returning a plain list."""
        if len(vector) != self.cols:
            raise ShapeError(f"vector of length {len(vector)} against {self.rows}x{self.cols} matrix")
        vec = [rat(x) for x in vector]
        out = [ZERO] * self.rows
        for i in range(self.rows):
            s = ZERO
            for a, b in zip(self._rows[i], vec):
                if a and b:
                    s += a * b
            out[i] = s
        return out

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> Matrix:
        out = Matrix(len(row_idx), len(col_idx))
        for a, i in enumerate(row_idx):
            src = self._rows[i]
            out._rows[a] = [src[j] for j in col_idx]
        return out

    def is_zero(self) -> bool:
        return all(not x for r in self._rows for x in r)

    def __repr__(self) -> str:
        if self.rows * self.cols <= 12:
            body = "; ".join(" ".join(rat_str(x) for x in r) for r in self._rows)
            return f"Matrix({self.rows}x{self.cols}: {body})"
        return f"Matrix({self.rows}x{self.cols})"

    def _same_shape(self, other: Matrix) -> None:
        if self.rows != other.rows or self.cols != other.cols:
            raise ShapeError(f"shape mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}")


def _echelon(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot columns)."""
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = ONE / rows[r][c]
        if inv != 1:
            rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def rank(m: Matrix) -> int:
    _, pivots = _echelon(m.to_lists(), m.cols)
    return len(pivots)


def kernel_basis(m: Matrix) -> Matrix:
    """Columns spanning ker(m); a 0xN matrix has the full N-dim kernel."""
    rows, pivots = _echelon(m.to_lists(), m.cols)
    free = [c for c in range(m.cols) if c not in pivots]
    out = Matrix(m.cols, len(free))
    for k, f in enumerate(free):
        out._rows[f][k] = ONE
        for r, p in enumerate(pivots):
            if rows[r][f]:
                out._rows[p][k] = -rows[r][f]
    return out


def solve(m: Matrix, b: Matrix) -> Matrix | None:
    """One exact solution x of m x = b (free coordinates 0), or None."""
    if b.rows != m.rows:
        raise ShapeError(f"solve: {m.rows}x{m.cols} matrix against {b.rows}x{b.cols} right-hand side")
    if b.cols != 1:
        raise ShapeError("solve expects a single right-hand column; see solve_columns")
    x = solve_columns(m, b)
    return x


def solve_columns(m: Matrix, b: Matrix) -> Matrix | None:
    """Solve m X = b for every column of b at once; None if any fails."""
    aug = [m.row(i) + b.row(i) for i in range(m.rows)]
    rows, pivots = _echelon(aug, m.cols)
    # A pivot that only appears past column m.cols marks an inconsistency.
    used = len(pivots)
    for i in range(used, len(rows)):
        if any(rows[i][m.cols:]):
            return None
    out = Matrix(m.cols, b.cols)
    for r, p in enumerate(pivots):
        out._rows[p] = rows[r][m.cols:]
    return out


def determinant(m: Matrix) -> Fraction:
    if m.rows != m.cols:
        raise ShapeError("determinant of a non-square matrix")
    rows = m.to_lists()
    n = m.rows
    det = ONE
    for c in range(n):
        pivot = next((i for i in range(c, n) if rows[i][c]), None)
        if pivot is None:
            return ZERO
        if pivot != c:
            rows[c], rows[pivot] = rows[pivot], rows[c]
            det = -det
        det *= rows[c][c]
        inv = ONE / rows[c][c]
        for i in range(c + 1, n):
            if rows[i][c]:
                f = rows[i][c] * inv
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return det


def is_invertible(m: Matrix) -> bool:
    return m.rows == m.cols and rank(m) == m.rows


def inverse(m: Matrix) -> Matrix:
    if m.rows != m.cols:
        raise ShapeError("inverse of a non-square matrix")
    inv = solve_columns(m, Matrix.identity(m.rows))
    if inv is None or rank(m) != m.rows:
        raise ShapeError("matrix is singular")
    return inv


def quotient_dim(z: Matrix, b: Matrix) -> int:
    """dim(span z / span b), after checking span(b) <= span(z)."""
    if z.rows != b.rows:
        raise ShapeError("quotient_dim: ambient dimensions differ")
    if b.cols and solve_columns(z, b) is None:
        raise SubspaceViolation("columns of b do not all lie in span(z)")
    return rank(z) - rank(b)


def complete_basis(partial: Matrix) -> tuple[Matrix, list[int]]:
    """Extend independent columns to a full basis of the ambient space.

    Standard basis vectors are tried in index order (lowest first); returns
    the completed square matrix [partial | chosen e_i] and the chosen indices.
    """
    n = partial.rows
    cols = [partial.col(j) for j in range(partial.cols)]
    base_rank = rank(partial)
    if base_rank != partial.cols:
        raise ShapeError("complete_basis expects independent columns")
    chosen: list[int] = []
    current = base_rank
    for i in range(n):
        if current == n:
            break
        candidate = [ZERO] * n
        candidate[i] = ONE
        trial = Matrix(n, len(cols) + 1)
        for r in range(n):
            trial._rows[r] = [c[r] for c in cols] + [candidate[r]]
        if rank(trial) > current:
            cols.append(candidate)
            chosen.append(i)
            current += 1
    if current != n:
        raise ShapeError("could not complete to a basis")
    full = Matrix(n, n)
    for r in range(n):
        full._rows[r] = [c[r] for c in cols]
    return full, chosen
