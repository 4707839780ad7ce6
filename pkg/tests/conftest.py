from functools import lru_cache

import pytest

from cdtgraphs.catalog import NAMES, build, expected_row, fixture_oac
from cdtgraphs.oac import analyse_kappa
from cdtgraphs.symmetry import automorphism_group
from cdtgraphs.verify import zip_graph


@lru_cache(maxsize=None)
def graph(name):
    return build(name)


@lru_cache(maxsize=None)
def group(name):
    return automorphism_group(graph(name))


@lru_cache(maxsize=None)
def kappa(name):
    row = expected_row(name)
    return analyse_kappa(graph(name), row.g, row.k)


@lru_cache(maxsize=None)
def zipped(name):
    return zip_graph(name)


@lru_cache(maxsize=None)
def fixture(name):
    return fixture_oac(name)


@pytest.fixture(params=NAMES)
def name(request):
    return request.param


ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[n])
