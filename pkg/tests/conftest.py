import itertools

import pytest
from hypothesis import strategies as st

from scoreseq.graph import Graph


@st.composite
def graphs(draw, max_n=6, min_n=1):
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, tuple(chosen))


ACCEPTANCE_RESULTS = []


@pytest.fixture
def acceptance_report():
    def record(number, title, passed, detail=""):
        ACCEPTANCE_RESULTS.append((number, title, passed, detail))
        print(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {title} {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number, title, passed, detail in sorted(ACCEPTANCE_RESULTS):
        terminalreporter.write_line(
            f"{'PASS' if passed else 'FAIL'}  {number}. {title}  {detail}".rstrip()
        )
