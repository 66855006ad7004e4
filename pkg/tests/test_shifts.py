import pytest
from hypothesis import given

from detmult.degmat import (
    DegreeMatrix,
    delete_first_col,
    delete_first_col_row,
    delete_last_col,
    delete_last_col_row,
    equidegree,
    translate,
)
from detmult.resolution import betti_table_enumerated
from detmult.shifts import max_shifts, max_shifts_band, min_shifts, min_shifts_band

from conftest import degree_matrices

WORKED = DegreeMatrix((1, 1, 2), (0, 0))


def test_equidegree_shifts():
    dm = equidegree(3, 4, 2)
    assert tuple(min_shifts(dm)) == (6, 8, 10, 12)
    assert tuple(max_shifts(dm)) == (6, 8, 10, 12)


def test_principal():
    dm = DegreeMatrix((5,), (0,))
    assert tuple(min_shifts(dm)) == tuple(max_shifts(dm)) == (5,)


def test_worked_instance_against_enumeration():
    bt = betti_table_enumerated(WORKED)
    expected_m = tuple(bt.min_shift(s) for s in (1, 2))
    expected_big_m = tuple(bt.max_shift(s) for s in (1, 2))
    assert expected_m == (2, 4) and expected_big_m == (3, 4)
    assert tuple(min_shifts(WORKED)) == expected_m
    assert tuple(max_shifts(WORKED)) == expected_big_m


def test_one_based_indexing():
    m = min_shifts(WORKED)
    assert (m[1], m[2]) == (2, 4)
    with pytest.raises(IndexError):
        m[0]
    assert m.kind == "min" and max_shifts(WORKED).kind == "max"


@given(degree_matrices(min_b=-4))
def test_band_form_matches_vector_form(dm):
    assert min_shifts_band(dm) == min_shifts(dm).values
    assert max_shifts_band(dm) == max_shifts(dm).values


@given(degree_matrices(min_b=-4))
def test_shift_vector_invariants(dm):
    for sv in (min_shifts(dm), max_shifts(dm)):
        vals = sv.values
        assert len(vals) == dm.c
        assert all(x < y for x, y in zip(vals, vals[1:]))
        assert vals[0] >= dm.t
    assert all(x <= y for x, y in zip(min_shifts(dm), max_shifts(dm)))


@given(degree_matrices(min_b=-4), degree_matrices().map(lambda d: d.cols[0]))
def test_translation_invariant(dm, k):
    moved = translate(dm, k - 3)
    assert min_shifts(moved) == min_shifts(dm)
    assert max_shifts(moved) == max_shifts(dm)


@given(degree_matrices())
def test_lemma_relations(dm):
    t, c = dm.t, dm.c
    m, big_m = min_shifts(dm), max_shifts(dm)
    if t >= 2:
        prev = min_shifts(delete_last_col_row(dm))
        nxt = max_shifts(delete_first_col_row(dm))
        for i in range(1, c + 1):
            assert m[i] == prev[i] + dm.entry(t + i - 1, t)
            assert big_m[i] == nxt[i] + dm.entry(c - i + 1, 1)
        for i in range(1, c):
            assert m[i] >= prev[i + 1]
            assert big_m[i] <= nxt[i + 1]
    if c >= 2:
        mj = min_shifts(delete_last_col(dm))
        mk = max_shifts(delete_first_col(dm))
        for i in range(1, c):
            assert mj[i] == m[i]
            assert mk[i] == big_m[i]


@given(degree_matrices(max_t=3, max_c=3))
def test_shifts_match_enumerated_table(dm):
    bt = betti_table_enumerated(dm)
    for s in range(1, dm.c + 1):
        assert bt.min_shift(s) == min_shifts(dm)[s]
        assert bt.max_shift(s) == max_shifts(dm)[s]


def test_equality_iff_pure():
    assert min_shifts(WORKED) != max_shifts(WORKED).values
    # complete intersection of degrees 2, 3: Koszul shifts {2, 3} then {5}
    ci = DegreeMatrix((2, 3), (0,))
    assert min_shifts(ci).values == (2, 5)
    assert max_shifts(ci).values == (3, 5)
    ci = DegreeMatrix((3, 3, 3), (0,))
    assert min_shifts(ci).values == max_shifts(ci).values == (3, 6, 9)
