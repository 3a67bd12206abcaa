import pytest

from flowerkit.fleet import default_fleet
from flowerkit.numkit import make_grid


@pytest.fixture(scope="session")
def grid():
    return make_grid(2, 4096)


@pytest.fixture(scope="session")
def small_grid():
    return make_grid(2, 512)


@pytest.fixture(scope="session")
def fleet():
    return default_fleet()
