import pytest

from unitop.census import enumerate_topologies
from unitop.space import build_space, discrete, indiscrete, sierpinski

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def sier():
    return sierpinski()


@pytest.fixture
def disc2():
    return discrete(2)


@pytest.fixture
def disc3():
    return discrete(3)


@pytest.fixture
def indisc2():
    return indiscrete(2)


def spaces_up_to(k, start=0):
    out = []
    for n in range(start, k + 1):
        out.extend(enumerate_topologies(n))
    return out


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


__all__ = ["build_space", "spaces_up_to"]
