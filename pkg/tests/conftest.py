import pytest

from hypint.precision import PrecisionContext


@pytest.fixture(scope="session")
def ctx():
    return PrecisionContext(128)


@pytest.fixture(scope="session")
def ctx192():
    return PrecisionContext(192)
