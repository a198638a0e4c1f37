import pytest

from coideal_lab.coefficients import default_bicharacter


@pytest.fixture(scope="session")
def bc2():
    return default_bicharacter(2)


@pytest.fixture(scope="session")
def bc3():
    return default_bicharacter(3)
