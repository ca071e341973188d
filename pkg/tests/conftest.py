from pathlib import Path

import pytest

from mspotty.codes import ByteLayout, span
from mspotty.rings import build

DATA = Path(__file__).resolve().parent.parent / "data"

TERNARY_ROWS = [[1, 0, 2, 2, 2, 0, 1, 0, 0],
             [0, 1, 1, 0, 1, 0, 0, 0, 0]]
SENARY_ROWS = [[1, 1, 1, 5, 4, 2],
             [0, 3, 0, 3, 3, 3],
             [0, 0, 3, 3, 0, 3]]

ACCEPTANCE_LINES = []


def record_acceptance(number, ok, detail):
    ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def data_dir():
    return DATA


@pytest.fixture(scope="session")
def z3():
    return build("Z3")


@pytest.fixture(scope="session")
def z6():
    return build("Z6")


@pytest.fixture(scope="session")
def gf4():
    return build("F(2,2;1,1,1)")


@pytest.fixture(scope="session")
def ternary(z3):
    return span(z3, ByteLayout(3, 3, 2), TERNARY_ROWS)


@pytest.fixture(scope="session")
def senary(z6):
    return span(z6, ByteLayout(2, 3, 2), SENARY_ROWS)
