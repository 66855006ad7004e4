"""Graded Betti table of the Eagon-Northcott resolution and its K-polynomial.

At homological step ``s`` (1 <= s <= c) the free module is
``wedge^{t+s-1} G* (x) S_{s-1}(F) (x) wedge^t F``.  Its basis elements are
pairs ``(S, m)`` with ``S`` a (t+s-1)-subset of the columns and ``m`` a
multiset of s-1 rows, and the generator sits in degree

    sum_{k in S} a_k - sum_{i=1}^t b_i - sum_{i in m} b_i.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from math import comb
from typing import Iterator, Mapping

from .degmat import DegreeMatrix, canonicalize

DEFAULT_ENUM_CAP = 10**7
ENUM_CAP_ENV = "DETMULT_ENUM_CAP"


class EnumerationCapExceeded(RuntimeError):
    pass


def default_enum_cap() -> int:
    raw = os.environ.get(ENUM_CAP_ENV)
    return int(raw) if raw else DEFAULT_ENUM_CAP


@dataclass(frozen=True)
class BettiTable:
    t: int
    c: int
    entries: Mapping[tuple[int, int], int]

    def __post_init__(self):
        # frozen, sorted copy so equal tables compare and serialize identically
        object.__setattr__(self, "entries", dict(sorted(self.entries.items())))
        if self.entries.get((0, 0)) != 1:
            raise ValueError("Betti table must contain (0, 0) with count 1")
        for (s, j), n in self.entries.items():
            if n <= 0:
                raise ValueError(f"nonpositive count {n} at ({s}, {j})")
            if not 0 <= s <= self.c:
                raise ValueError(f"step {s} outside 0..{self.c}")
        missing = set(range(self.c + 1)) - {s for s, _ in self.entries}
        if missing:
            raise ValueError(f"steps without generators: {sorted(missing)}")

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return (self.t, self.c, self.entries) == (other.t, other.c, other.entries)

    def __hash__(self):
        return hash((self.t, self.c, tuple(self.entries.items())))

    def step(self, s: int) -> dict[int, int]:
        return {j: n for (k, j), n in self.entries.items() if k == s}

    def min_shift(self, s: int) -> int:
        return min(self.step(s))

    def max_shift(self, s: int) -> int:
        return max(self.step(s))

    def total(self, s: int) -> int:
        return sum(self.step(s).values())

    def items(self) -> Iterator[tuple[int, int, int]]:
        for (s, j), n in self.entries.items():
            yield s, j, n

    def to_json(self) -> list[dict]:
        return [{"step": s, "shift": j, "count": str(n)} for s, j, n in self.items()]

    def diagram(self) -> str:
        """Macaulay2-style diagram: column ``s``, row ``j - s``."""
        rows = sorted({j - s for s, j, _ in self.items()})
        cells = {(s, j - s): str(n) for s, j, n in self.items()}
        width = max(len(v) for v in cells.values()) + 1
        label_w = max(len("total:"), *(len(f"{r}:") for r in rows))
        header = " " * label_w + "".join(f"{s:>{width}}" for s in range(self.c + 1))
        totals = "total:".rjust(label_w) + "".join(
            f"{self.total(s):>{width}}" for s in range(self.c + 1))
        lines = [header, totals]
        for r in rows:
            line = f"{r}:".rjust(label_w)
            line += "".join(f"{cells.get((s, r), '.'):>{width}}" for s in range(self.c + 1))
            lines.append(line)
        return "\n".join(lines)


@dataclass(frozen=True)
class KPolynomial:
    coefficients: tuple[int, ...]

    def __call__(self, z):
        acc = 0
        for coef in reversed(self.coefficients):
            acc = acc * z + coef
        return acc

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def divide_one_minus_z(self) -> tuple[KPolynomial, int]:
        """Quotient and remainder of division by ``1 - z``.

        The quotient has partial sums of the coefficients and the remainder
        is the value at ``z = 1``.
        """
        q, acc = [], 0
        for coef in self.coefficients[:-1]:
            acc += coef
            q.append(acc)
        rem = acc + self.coefficients[-1]
        return KPolynomial(tuple(q) or (0,)), rem

    def __str__(self):
        terms = []
        for k, coef in enumerate(self.coefficients):
            if coef == 0:
                continue
            mag = abs(coef)
            mono = "" if k == 0 else ("z" if k == 1 else f"z^{k}")
            body = str(mag) if not mono else (mono if mag == 1 else f"{mag}{mono}")
            sign = "-" if coef < 0 else "+"
            terms.append((sign, body))
        if not terms:
            return "0"
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _mul(p: dict[int, int], q: dict[int, int]) -> dict[int, int]:
    out: dict[int, int] = {}
    for i, x in p.items():
        for j, y in q.items():
            out[i + j] = out.get(i + j, 0) + x * y
    return out


def _add_shifted(acc: dict[int, int], p: dict[int, int], shift: int) -> None:
    for i, x in p.items():
        acc[i + shift] = acc.get(i + shift, 0) + x


def _elementary_slices(degrees, kmax: int) -> list[dict[int, int]]:
    # E[k] = coefficient of y^k in prod_j (1 + y z^{d_j})
    e = [{0: 1}] + [{} for _ in range(kmax)]
    for d in degrees:
        for k in range(kmax, 0, -1):
            _add_shifted(e[k], e[k - 1], d)
    return e


def _complete_slices(degrees, kmax: int) -> list[dict[int, int]]:
    # H[k] = coefficient of y^k in prod_i 1 / (1 - y z^{d_i})
    h = [{0: 1}] + [{} for _ in range(kmax)]
    for d in degrees:
        for k in range(1, kmax + 1):
            _add_shifted(h[k], h[k - 1], d)
    return h


def betti_table(dm: DegreeMatrix) -> BettiTable:
    """Graded Betti numbers of R/I via generating-function coefficient extraction."""
    dm = canonicalize(dm)
    t, c = dm.t, dm.c
    top = dm.rows[0]
    base = sum(dm.rows)
    e = _elementary_slices(dm.cols, t + c - 1)
    # row degrees reflected to top - b_i >= 0 so every exponent is nonnegative
    h = _complete_slices([top - b for b in dm.rows], c - 1)
    entries = {(0, 0): 1}
    for s in range(1, c + 1):
        offset = -(s - 1) * top - base
        for j, n in _mul(e[t + s - 1], h[s - 1]).items():
            if n:
                entries[(s, j + offset)] = n
    return BettiTable(t, c, entries)


def total_betti_counts(dm: DegreeMatrix) -> tuple[int, ...]:
    t, c = dm.t, dm.c
    return tuple(comb(t + c - 1, t + s - 1) * comb(t + s - 2, s - 1) for s in range(1, c + 1))


def betti_table_enumerated(dm: DegreeMatrix, cap: int | None = None) -> BettiTable:
    """Same table as :func:`betti_table`, by listing every generator ``(S, m)``."""
    if cap is None:
        cap = default_enum_cap()
    total = sum(total_betti_counts(dm))
    if total > cap:
        raise EnumerationCapExceeded(f"{total} generators exceed the enumeration cap {cap}")
    t, c = dm.t, dm.c
    a, b = dm.cols, dm.rows
    base = sum(b)
    entries = {(0, 0): 1}
    for s in range(1, c + 1):
        col_sums = [sum(a[k] for k in S) for S in combinations(range(len(a)), t + s - 1)]
        row_sums = [sum(b[i] for i in m) for m in combinations_with_replacement(range(t), s - 1)]
        counts = Counter(x - y - base for x in col_sums for y in row_sums)
        for j, n in counts.items():
            entries[(s, j)] = n
    return BettiTable(t, c, entries)


def enumeration_size(dm: DegreeMatrix) -> int:
    return sum(total_betti_counts(dm))


def k_polynomial(bt: BettiTable) -> KPolynomial:
    """Numerator ``N(z) = sum_s (-1)^s sum_j beta_{s,j} z^j`` of the Hilbert series."""
    top = max(j for _, j, _ in bt.items())
    coeffs = [0] * (top + 1)
    for s, j, n in bt.items():
        if j < 0:
            raise ValueError("K-polynomial needs nonnegative shifts")
        coeffs[j] += (-1) ** s * n
    return KPolynomial(tuple(coeffs))


def power_sums(bt: BettiTable, k: int) -> int:
    """``sum_s (-1)^s sum_j beta_{s,j} j^k``."""
    return sum((-1) ** s * n * j**k for s, j, n in bt.items())
