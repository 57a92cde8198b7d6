import pytest

from wiptsim import default_scenario


@pytest.fixture(scope="session")
def scenario():
    return default_scenario()
