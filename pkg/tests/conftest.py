import random

import pytest
from hypothesis import settings

from liecohom import catalog
from liecohom.invariants import InvariantSetup
from liecohom.representations import adjoint_rep, trivial_rep

settings.register_profile("suite", deadline=None, max_examples=40)
settings.load_profile("suite")

# one line per acceptance criterion, echoed after capture ends
ACCEPTANCE_LINES: list = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


@pytest.fixture(scope="session")
def sl2():
    return catalog.sl2()


@pytest.fixture(scope="session")
def h1():
    return catalog.heisenberg(1)


@pytest.fixture(scope="session")
def h2():
    return catalog.heisenberg(2)


@pytest.fixture(scope="session")
def sch2():
    return catalog.schrodinger(2)


@pytest.fixture(scope="session")
def sch3():
    return catalog.schrodinger(3)


@pytest.fixture(scope="session")
def g2():
    return catalog.schrodinger_mod_center(2)


@pytest.fixture(scope="session")
def sch2_adj_setup(sch2):
    levi, radical = catalog.canonical_split(sch2)
    return InvariantSetup(sch2, levi, radical, adjoint_rep(sch2))


@pytest.fixture(scope="session")
def sch2_triv_setup(sch2):
    levi, radical = catalog.canonical_split(sch2)
    return InvariantSetup(sch2, levi, radical, trivial_rep(sch2, 1))


@pytest.fixture
def rng():
    return random.Random(20250819)
