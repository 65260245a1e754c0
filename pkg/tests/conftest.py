import sys

from functools import lru_cache

import pytest

from paley4.designs import load_m11
from paley4.field import field_make
from paley4.hypergraph import build_paley_hypergraph

# every paley-admissible q <= 31, as (p, ell)
ADMISSIBLE = [(3, 1), (7, 1), (11, 1), (19, 1), (23, 1), (3, 3), (31, 1)]


@lru_cache(maxsize=None)
def paley(p, ell=1):
    return build_paley_hypergraph(field_make(p, ell))


@pytest.fixture(scope="session")
def gf7():
    return field_make(7)


@pytest.fixture(scope="session")
def gf11():
    return field_make(11)


@pytest.fixture(scope="session")
def gf27():
    return field_make(3, 3)


@pytest.fixture(scope="session")
def h7():
    return paley(7)


@pytest.fixture(scope="session")
def h11():
    return paley(11)


@pytest.fixture(scope="session")
def m11():
    return load_m11()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.SUMMARY:
        terminalreporter.section("acceptance criteria")
        for line in mod.SUMMARY:
            terminalreporter.write_line(line)
