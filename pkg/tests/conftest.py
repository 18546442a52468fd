import pytest
from hypothesis import settings

from intervaltotal import graph as G

# brute-force oracles on dense 8-vertex graphs take variable time per example
settings.register_profile("oracles", deadline=None)
settings.load_profile("oracles")


@pytest.fixture
def k2():
    return G.complete(2)


@pytest.fixture
def wheel6():
    return G.wheel(6)


def pytest_terminal_summary(terminalreporter):
    import test_acceptance

    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
