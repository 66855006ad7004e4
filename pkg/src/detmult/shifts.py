"""Minimal and maximal shifts of the resolution of R/I."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

from .degmat import DegreeMatrix


@dataclass(frozen=True)
class ShiftVector:
    values: tuple[int, ...]
    kind: Literal["min", "max"]

    def __getitem__(self, i: int) -> int:
        # 1-based, like the shift index
        if not 1 <= i <= len(self.values):
            raise IndexError(f"shift index {i} outside 1..{len(self.values)}")
        return self.values[i - 1]

    def __len__(self):
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def product(self) -> int:
        p = 1
        for v in self.values:
            p *= v
        return p


def min_shifts_band(dm: DegreeMatrix) -> tuple[int, ...]:
    u, t = dm.entry, dm.t
    return tuple(
        sum(u(k, 1) for k in range(1, i + 1)) + sum(u(i + k - 1, k) for k in range(2, t + 1))
        for i in range(1, dm.c + 1)
    )


def max_shifts_band(dm: DegreeMatrix) -> tuple[int, ...]:
    u, t, c = dm.entry, dm.t, dm.c
    return tuple(
        sum(u(c - i + k, k) for k in range(1, t + 1))
        + sum(u(k, t) for k in range(t + c - i + 1, t + c))
        for i in range(1, c + 1)
    )


def _min_shifts_vec(dm: DegreeMatrix) -> tuple[int, ...]:
    a, b, t = dm.cols, dm.rows, dm.t
    sb = sum(b)
    return tuple(sum(a[:t + i - 1]) - sb - (i - 1) * b[0] for i in range(1, dm.c + 1))


def _max_shifts_vec(dm: DegreeMatrix) -> tuple[int, ...]:
    a, b, c = dm.cols, dm.rows, dm.c
    sb = sum(b)
    return tuple(sum(a[c - i:]) - sb - (i - 1) * b[-1] for i in range(1, c + 1))


def min_shifts(dm: DegreeMatrix) -> ShiftVector:
    m = _min_shifts_vec(dm)
    assert m == min_shifts_band(dm), "band and vector forms disagree"
    return ShiftVector(m, "min")


def max_shifts(dm: DegreeMatrix) -> ShiftVector:
    big_m = _max_shifts_vec(dm)
    assert big_m == max_shifts_band(dm), "band and vector forms disagree"
    return ShiftVector(big_m, "max")
