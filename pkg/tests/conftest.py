from pathlib import Path

import pytest
from hypothesis import strategies as st

from string_torsion import GroupAlgebraElement, LensSpace, parse_element

GOLDEN = Path(__file__).parent / "golden"

# filled by test_acceptance.py, printed at the end of the session
ACCEPTANCE_LINES = {}


def elements(order=7, modulus=0, lo=-5, hi=5):
    return st.lists(st.integers(lo, hi), min_size=order, max_size=order).map(
        lambda cs: GroupAlgebraElement(order, modulus, tuple(cs))
    )


@pytest.fixture
def tau():
    return parse_element("t + t^2 + t^3 - t^5 - t^6", 7)


@pytest.fixture
def L1():
    return LensSpace(1, 7)


@pytest.fixture
def L2():
    return LensSpace(2, 7)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[key])
