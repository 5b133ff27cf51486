import sys
from pathlib import Path

import pytest

from icequiver.suite import load_example

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).resolve().parents[1] / "src" / "icequiver" / "data"


@pytest.fixture
def example1():
    return load_example("example1")


@pytest.fixture
def example2():
    return load_example("example2")


@pytest.fixture
def data_dir():
    return DATA


ACCEPTANCE_LINES = []


@pytest.fixture
def acceptance_log():
    return ACCEPTANCE_LINES


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split("criterion ")[1].split(":")[0])):
            terminalreporter.write_line(line)
