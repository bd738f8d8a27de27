import pytest

from cointerval import Hypergraph

ACCEPTANCE_KEY = pytest.StashKey()


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)


@pytest.fixture
def acceptance(request):
    """Record one pass/fail line per criterion for the terminal summary."""

    def record(line):
        request.config.stash[ACCEPTANCE_KEY].append(line)

    return record


@pytest.fixture
def copath5():
    # complement of the path 2-3-4-5 plus the dominating vertex 1
    return Hypergraph(
        2, range(1, 6), [(1, 2), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (3, 5)]
    )


@pytest.fixture
def two_k2():
    return Hypergraph(2, range(1, 5), [(1, 2), (3, 4)])


@pytest.fixture
def k4_3():
    return Hypergraph(3, range(1, 5), [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4)])
