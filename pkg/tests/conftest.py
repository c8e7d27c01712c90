from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / 'fixtures'


def pytest_addoption(parser):
    parser.addoption('--slow', action='store_true', default=False,
                     help='run the exhaustive sweeps marked slow')


def pytest_collection_modifyitems(config, items):
    if config.getoption('--slow'):
        return
    skip_slow = pytest.mark.skip(reason='exhaustive sweep; run with --slow')
    for item in items:
        if 'slow' in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def fixture_path():
    def path(name):
        return str(FIXTURES / name)
    return path
