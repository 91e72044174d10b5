import pytest

from bexponents.invariants import admissible_grid

ACCEPTANCE = {}


@pytest.fixture(scope="session")
def grid():
    return admissible_grid()


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        terminalreporter.write_line(ACCEPTANCE[n])
