"""Dense exact linear algebra over the rationals.

Plain fraction arithmetic with first-nonzero pivoting keeps every run
bit-reproducible; there are deliberately no numerical pivot heuristics
here.  Fractions normalize themselves after every operation, so entries
stay in lowest terms throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"exact matrices take int/Fraction entries, got {type(x).__name__}")


class ExactMatrix:
    """Immutable dense matrix of Fractions, stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries, cols=None):
        rows = [tuple(_to_fraction(x) for x in row) for row in entries]
        if rows:
            width = len(rows[0])
            for row in rows:
                if len(row) != width:
                    raise ValueError("ragged rows")
            if cols is not None and cols != width:
                raise ValueError(f"declared {cols} columns but rows have {width}")
        else:
            if cols is None:
                raise ValueError("a matrix with no rows needs an explicit column count")
            width = int(cols)
        self.rows = len(rows)
        self.cols = width
        self.entries = tuple(rows)

    @classmethod
    def from_columns(cls, columns, rows=None):
        cols = [list(c) for c in columns]
        if not cols:
            if rows is None:
                raise ValueError("a matrix with no columns needs an explicit row count")
            return cls([[] for _ in range(rows)] if rows else [], cols=0)
        height = len(cols[0])
        for c in cols:
            if len(c) != height:
                raise ValueError("ragged columns")
        return cls([[c[i] for c in cols] for i in range(height)])

    @classmethod
    def identity(cls, n):
        return cls([[Fraction(i == j) for j in range(n)] for i in range(n)])

    def at(self, i, j) -> Fraction:
        return self.entries[i][j]

    def row(self, i) -> tuple[Fraction, ...]:
        return self.entries[i]

    def column(self, j) -> tuple[Fraction, ...]:
        return tuple(r[j] for r in self.entries)

    def transpose(self) -> "ExactMatrix":
        if self.rows == 0:
            return ExactMatrix([[] for _ in range(self.cols)] if self.cols else [], cols=0)
        return ExactMatrix(
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __eq__(self, other):
        return (
            isinstance(other, ExactMatrix)
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"ExactMatrix({self.rows}x{self.cols})"


@dataclass(frozen=True)
class RREResult:
    """A completely reduced row echelon matrix plus its pivot columns."""

    matrix: ExactMatrix
    pivot_columns: tuple[int, ...]


def rre(A: ExactMatrix) -> RREResult:
    """Completely reduced row echelon form with zero rows dropped.

    Pivots are unit, pivot columns are cleared above and below, and the
    pivot for each step is the first row with a nonzero entry in the
    current column (no magnitude heuristics, so results are canonical:
    two matrices have the same reduced form exactly when they have the
    same row space).
    """
    work = [list(row) for row in A.entries]
    nrows, ncols = A.rows, A.cols
    pivots = []
    prow = 0
    for col in range(ncols):
        if prow == nrows:
            break
        src = next((i for i in range(prow, nrows) if work[i][col] != 0), None)
        if src is None:
            continue
        if src != prow:
            work[prow], work[src] = work[src], work[prow]
        inv = 1 / work[prow][col]
        if inv != 1:
            work[prow] = [x * inv for x in work[prow]]
        for i in range(nrows):
            if i == prow:
                continue
            f = work[i][col]
            if f != 0:
                pivot_row = work[prow]
                work[i] = [a - f * b for a, b in zip(work[i], pivot_row)]
        pivots.append(col)
        prow += 1
    reduced = ExactMatrix(work[:prow], cols=ncols) if prow else ExactMatrix([], cols=ncols)
    return RREResult(reduced, tuple(pivots))


def rank(A: ExactMatrix) -> int:
    return len(rre(A).pivot_columns)


def kernel_exact(A: ExactMatrix) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per non-pivot column.

    The basis is in border form: vector j has entry 1 at its own
    non-pivot column, entries only at pivot columns otherwise, so
    stacking the vectors shows an identity block on the free columns.
    """
    res = rre(A)
    E, piv = res.matrix, res.pivot_columns
    pivset = set(piv)
    basis = []
    for j in range(A.cols):
        if j in pivset:
            continue
        vec = [Fraction(0)] * A.cols
        vec[j] = Fraction(1)
        for r, pc in enumerate(piv):
            c = E.entries[r][j]
            if c != 0:
                vec[pc] = -c
        basis.append(vec)
    return basis


def column_reduce_to_echelon(A: ExactMatrix) -> tuple[ExactMatrix, tuple[int, ...]]:
    """Completely reduced column echelon form, same shape, pivot rows reported.

    Columns are combined left to right; scanning rows top-down, the first
    column with a nonzero entry in the current row becomes the pivot
    column, is normalized, and clears that row from every other column.
    Zero columns end up on the right.  The reported pivot rows are the
    leading row indices, in increasing order.
    """
    work = [[A.entries[i][j] for j in range(A.cols)] for i in range(A.rows)]
    nrows, ncols = A.rows, A.cols
    pivot_rows = []
    pcol = 0
    for row in range(nrows):
        if pcol == ncols:
            break
        src = next((j for j in range(pcol, ncols) if work[row][j] != 0), None)
        if src is None:
            continue
        if src != pcol:
            for i in range(nrows):
                work[i][pcol], work[i][src] = work[i][src], work[i][pcol]
        inv = 1 / work[row][pcol]
        if inv != 1:
            for i in range(nrows):
                work[i][pcol] *= inv
        for j in range(ncols):
            if j == pcol:
                continue
            f = work[row][j]
            if f != 0:
                for i in range(nrows):
                    work[i][j] -= f * work[i][pcol]
        pivot_rows.append(row)
        pcol += 1
    return ExactMatrix(work, cols=ncols), tuple(pivot_rows)
