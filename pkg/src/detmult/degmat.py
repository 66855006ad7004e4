"""Degree matrices of t x (t+c-1) homogeneous matrices.

A degree matrix is stored through its twist vectors: column degrees
``a_1 <= ... <= a_{t+c-1}`` and row degrees ``b_1 >= ... >= b_t``, so that
the entry in column ``j`` and row ``i`` has degree ``u(j, i) = a_j - b_i``.
Indices are 1-based throughout to match the usual notation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


class DegreeMatrixError(ValueError):
    """Raised when input does not describe a valid degree matrix."""


@dataclass(frozen=True)
class DegreeMatrix:
    cols: tuple[int, ...]
    rows: tuple[int, ...]

    def __post_init__(self):
        cols = tuple(int(x) for x in self.cols)
        rows = tuple(int(x) for x in self.rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise DegreeMatrixError("row degrees must be nonempty")
        if len(cols) < len(rows):
            raise DegreeMatrixError(
                f"need at least as many columns as rows (got {len(cols)} < {len(rows)})")
        if any(x > y for x, y in zip(cols, cols[1:])):
            raise DegreeMatrixError("column degrees must be nondecreasing")
        if any(x < y for x, y in zip(rows, rows[1:])):
            raise DegreeMatrixError("row degrees must be nonincreasing")
        if cols[0] - rows[0] < 1:
            raise DegreeMatrixError(
                f"band positivity violated: u(1,1) = a_1 - b_1 = {cols[0] - rows[0]} < 1")

    @property
    def t(self) -> int:
        return len(self.rows)

    @property
    def c(self) -> int:
        return len(self.cols) - len(self.rows) + 1

    def entry(self, j: int, i: int) -> int:
        return entry(self, j, i)

    def grid(self) -> list[list[int]]:
        """Full t x (t+c-1) grid, row ``i`` holding ``u(1,i), ..., u(t+c-1,i)``."""
        return [[a - b for a in self.cols] for b in self.rows]

    def sort_key(self):
        return (self.t, self.c, self.cols, self.rows)

    def to_json(self) -> dict:
        return {"cols": list(self.cols), "rows": list(self.rows)}

    def __repr__(self):
        return f"DegreeMatrix(t={self.t}, c={self.c}, a={self.cols}, b={self.rows})"


def from_vectors(cols: Sequence[int], rows: Sequence[int]) -> DegreeMatrix:
    """Build a degree matrix from unsorted column and row twist degrees."""
    return DegreeMatrix(tuple(sorted(cols)), tuple(sorted(rows, reverse=True)))


def from_full_matrix(u: Sequence[Sequence[int]], t: int | None = None,
                     cols: int | None = None) -> DegreeMatrix:
    """Recover ``(a, b)`` from a full grid ``u[i][j] = a_j - b_i``.

    The last row fixes ``b_t = 0``.  Rows and columns may come in any order;
    the result is re-sorted like :func:`from_vectors` and normalized with
    :func:`canonicalize`.
    """
    grid = [list(r) for r in u]
    if not grid or not grid[0]:
        raise DegreeMatrixError("degree grid must be nonempty")
    if t is not None and len(grid) != t:
        raise DegreeMatrixError(f"expected {t} rows, got {len(grid)}")
    width = len(grid[0])
    if any(len(r) != width for r in grid):
        raise DegreeMatrixError("degree grid is ragged")
    if cols is not None and width != cols:
        raise DegreeMatrixError(f"expected {cols} columns, got {width}")
    for r in grid:
        for x in r:
            if isinstance(x, bool) or not isinstance(x, int):
                raise DegreeMatrixError(f"grid entries must be integers, got {x!r}")

    a = list(grid[-1])
    b = [a[0] - r[0] for r in grid]
    for i, r in enumerate(grid):
        for j, x in enumerate(r):
            if x != a[j] - b[i]:
                raise DegreeMatrixError(
                    "additive consistency violated: "
                    f"u({j + 1},{i + 1}) + u(1,{len(grid)}) != "
                    f"u(1,{i + 1}) + u({j + 1},{len(grid)})")
    return canonicalize(from_vectors(a, b))


def entry(dm: DegreeMatrix, j: int, i: int) -> int:
    if not 1 <= j <= len(dm.cols):
        raise IndexError(f"column index {j} outside 1..{len(dm.cols)}")
    if not 1 <= i <= dm.t:
        raise IndexError(f"row index {i} outside 1..{dm.t}")
    return dm.cols[j - 1] - dm.rows[i - 1]


def translate(dm: DegreeMatrix, shift: int) -> DegreeMatrix:
    """Add ``shift`` to every twist degree; entries are unchanged."""
    return DegreeMatrix(tuple(x + shift for x in dm.cols), tuple(x + shift for x in dm.rows))


def canonicalize(dm: DegreeMatrix) -> DegreeMatrix:
    return translate(dm, -dm.rows[-1])


def delete_last_col_row(dm: DegreeMatrix) -> DegreeMatrix:
    if dm.t < 2:
        raise DegreeMatrixError("cannot delete a row from a matrix with t = 1")
    return DegreeMatrix(dm.cols[:-1], dm.rows[:-1])


def delete_last_col(dm: DegreeMatrix) -> DegreeMatrix:
    if dm.c < 2:
        raise DegreeMatrixError("cannot delete a column when c = 1")
    return DegreeMatrix(dm.cols[:-1], dm.rows)


def delete_first_col_row(dm: DegreeMatrix) -> DegreeMatrix:
    if dm.t < 2:
        raise DegreeMatrixError("cannot delete a row from a matrix with t = 1")
    return DegreeMatrix(dm.cols[1:], dm.rows[1:])


def delete_first_col(dm: DegreeMatrix) -> DegreeMatrix:
    if dm.c < 2:
        raise DegreeMatrixError("cannot delete a column when c = 1")
    return DegreeMatrix(dm.cols[1:], dm.rows)


def equidegree(t: int, c: int, d: int) -> DegreeMatrix:
    """Matrix whose entries all have degree ``d``."""
    return DegreeMatrix((d,) * (t + c - 1), (0,) * t)
