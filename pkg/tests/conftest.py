import pytest
from hypothesis import strategies as st

from subword_mobius.poset import make_antichain, make_chain, make_forest


def words(size, max_length):
    return st.lists(st.integers(0, size - 1), max_size=max_length).map(tuple)


@pytest.fixture(scope="session")
def chain3():
    return make_chain(3)


@pytest.fixture(scope="session")
def chain2():
    return make_chain(2)


@pytest.fixture(scope="session")
def ab():
    return make_antichain(2)


@pytest.fixture(scope="session")
def two_chains():
    return make_forest(2, 2)


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda l: int(l.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)
