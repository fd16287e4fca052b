import pytest

from codeshare.codes import LinearCode, code_from_parity
from codeshare.galois import field_make
from codeshare.matfield import MatrixF

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def acceptance_log():
    return ACCEPTANCE_LINES


@pytest.fixture(scope="session")
def F2():
    return field_make(2)


@pytest.fixture(scope="session")
def F3():
    return field_make(3)


@pytest.fixture(scope="session")
def F4():
    return field_make(2, 2)


@pytest.fixture(scope="session")
def F5():
    return field_make(5)


@pytest.fixture(scope="session")
def even32(F2):
    """The binary even-weight [3,2] code, H = [1 1 1]."""
    return code_from_parity(MatrixF.from_rows(F2, [[1, 1, 1]]))


@pytest.fixture(scope="session")
def rep2(F2):
    return LinearCode(MatrixF.from_rows(F2, [[1, 1]]))


@pytest.fixture(scope="session")
def rep3(F2):
    return LinearCode(MatrixF.from_rows(F2, [[1, 1, 1]]))


@pytest.fixture(scope="session")
def full1(F2):
    return LinearCode(MatrixF.from_rows(F2, [[1]]))
