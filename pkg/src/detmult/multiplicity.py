"""Multiplicity e(R/I) of a determinantal ideal.

Three independent routes are provided:

* ``multiplicity_en`` divides the K-polynomial of the Eagon-Northcott table
  by ``(1 - z)^c`` and evaluates at 1;
* ``multiplicity_linkage`` uses ``e(I) = e(I') + u(t+c-1, t) e(J)``, where
  ``I'`` drops the last row and column and ``J`` drops the last column;
* ``multiplicity_linkage_dual`` uses ``e(I) = e(I'') + u(1, 1) e(K)``,
  where ``I''`` drops the first row and column and ``K`` the first column.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, prod
from typing import Literal

from .degmat import (
    DegreeMatrix,
    canonicalize,
    delete_first_col,
    delete_first_col_row,
    delete_last_col,
    delete_last_col_row,
)
from .resolution import betti_table, k_polynomial


class InvariantViolation(RuntimeError):
    """An identity that holds for every valid input failed; always a bug."""


def _h_polynomial(dm: DegreeMatrix):
    n = k_polynomial(betti_table(dm))
    for step in range(1, dm.c + 1):
        n, rem = n.divide_one_minus_z()
        if rem != 0:
            raise InvariantViolation(
                f"K-polynomial of {dm!r} has remainder {rem} at division pass {step}")
    return n


def multiplicity_en(dm: DegreeMatrix) -> int:
    e = _h_polynomial(dm)(1)
    if e <= 0:
        raise InvariantViolation(f"nonpositive multiplicity {e} for {dm!r}")
    return e


def _base_case(dm: DegreeMatrix) -> int | None:
    if dm.c == 1:
        # degree of the t x t determinant
        return sum(a - b for a, b in zip(dm.cols, dm.rows))
    if dm.t == 1:
        # complete intersection
        return prod(a - dm.rows[0] for a in dm.cols)
    return None


@lru_cache(maxsize=None)
def _linkage(dm: DegreeMatrix) -> int:
    e = _base_case(dm)
    if e is not None:
        return e
    u = dm.entry(dm.t + dm.c - 1, dm.t)
    return _linkage(canonicalize(delete_last_col_row(dm))) + u * _linkage(
        canonicalize(delete_last_col(dm)))


@lru_cache(maxsize=None)
def _linkage_dual(dm: DegreeMatrix) -> int:
    e = _base_case(dm)
    if e is not None:
        return e
    u = dm.entry(1, 1)
    return _linkage_dual(canonicalize(delete_first_col_row(dm))) + u * _linkage_dual(
        canonicalize(delete_first_col(dm)))


def multiplicity_linkage(dm: DegreeMatrix) -> int:
    return _linkage(canonicalize(dm))


def multiplicity_linkage_dual(dm: DegreeMatrix) -> int:
    return _linkage_dual(canonicalize(dm))


def multiplicity_pure(t: int, c: int, d: int) -> int:
    """Multiplicity when every entry has degree ``d``: ``d^c * C(t+c-1, c)``."""
    for name, v in (("t", t), ("c", c), ("d", d)):
        if v < 1:
            raise ValueError(f"{name} must be positive, got {v}")
    return d**c * comb(t + c - 1, c)


Method = Literal["en", "linkage", "dual", "auto"]


def multiplicity(dm: DegreeMatrix, method: Method = "auto") -> int:
    if method == "en":
        return multiplicity_en(dm)
    if method == "linkage":
        return multiplicity_linkage(dm)
    if method == "dual":
        return multiplicity_linkage_dual(dm)
    if method != "auto":
        raise ValueError(f"unknown method {method!r}")
    e_en = multiplicity_en(dm)
    e_link = multiplicity_linkage(dm)
    if e_en != e_link:
        raise InvariantViolation(
            f"multiplicity methods disagree on {dm!r}: en={e_en}, linkage={e_link}")
    return e_en
