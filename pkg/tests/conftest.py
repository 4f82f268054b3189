import pytest

from roughset import Partition, Universe

ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def u5():
    return Universe(("a1", "a2", "a3", "a4", "a5"))


@pytest.fixture
def example1(u5):
    """Partitions pi < sigma and the set A used throughout the worked examples."""
    pi = Partition.from_blocks(u5, [["a1"], ["a2", "a3"], ["a4", "a5"]])
    sigma = Partition.from_blocks(u5, [["a1", "a2", "a3"], ["a4", "a5"]])
    a = u5.subset(["a1", "a2", "a3", "a4"])
    return pi, sigma, a


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
