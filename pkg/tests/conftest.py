import pytest
from hypothesis import strategies as st

from kdistant.partition import from_rgs, parse_partition

PI1 = "{1,5}{2,4,9}{3}{6,12}{7,10,11}{8}"
PI2 = "{1,6}{2,4,5}{3}"


@st.composite
def partitions(draw, max_n=10, min_n=0):
    n = draw(st.integers(min_n, max_n))
    word = []
    top = 0
    for _ in range(n):
        b = draw(st.integers(0, top))
        word.append(b)
        top = max(top, b + 1)
    return from_rgs(word)


@pytest.fixture
def pi1():
    return parse_partition(PI1)


@pytest.fixture
def pi2():
    return parse_partition(PI2)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, (passed, detail) in sorted(RESULTS.items()):
        line = f"{'PASS' if passed else 'FAIL'}  {label}"
        terminalreporter.write_line(line + (f"  -- {detail}" if detail else ""))
