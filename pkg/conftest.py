import random

import pytest

from apps.tilings import TilingId
from apps.tilings.builder import build


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture(params=list(TilingId), ids=str)
def any_system(request):
    return build(request.param)


@pytest.fixture(params=[tiling for tiling in TilingId if not tiling.is_regular], ids=str)
def uniform_system(request):
    return build(request.param)


def pytest_addoption(parser):
    parser.addoption(
        '--update-golden', action='store_true',
        help='Rewrite the golden SVG files from the current renderer',
    )


@pytest.fixture
def update_golden(request):
    return request.config.getoption('--update-golden')
