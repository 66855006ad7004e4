from __future__ import annotations

from hypothesis import strategies as st

from detmult.degmat import DegreeMatrix

ACCEPTANCE_LINES: list[str] = []


@st.composite
def degree_matrices(draw, max_t=4, max_c=4, max_b=6, max_gap=4, min_b=0):
    t = draw(st.integers(1, max_t))
    c = draw(st.integers(1, max_c))
    rows = sorted(draw(st.lists(st.integers(min_b, max_b), min_size=t, max_size=t)), reverse=True)
    gaps = draw(st.lists(st.integers(0, max_gap), min_size=t + c - 1, max_size=t + c - 1))
    cols = [rows[0] + 1 + gaps[0]]
    for g in gaps[1:]:
        cols.append(cols[-1] + g)
    return DegreeMatrix(tuple(cols), tuple(rows))


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
