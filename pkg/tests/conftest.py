import pytest

from config.settings import RUN_SLOW_TESTS
from src.lattice.toric import LatticeParams


def pytest_addoption(parser):
    parser.addoption('--runslow', action='store_true', default=False, help='run tests marked slow')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--runslow') or RUN_SLOW_TESTS:
        return
    skip_slow = pytest.mark.skip(reason='slow; use --runslow or RUN_SLOW_TESTS=1')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def p2():
    return LatticeParams(2)


@pytest.fixture
def p3():
    return LatticeParams(3)
