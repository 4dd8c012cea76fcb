import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from wkl import fixtures  # noqa: E402

_ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def comb():
    return fixtures.comb(6)


@pytest.fixture
def twochain():
    return fixtures.twochain(6)


@pytest.fixture
def vee():
    return fixtures.vee()


@pytest.fixture
def criterion():
    def record(number: int, passed: bool, detail: str):
        _ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if passed else 'FAIL'}  {detail}")
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
