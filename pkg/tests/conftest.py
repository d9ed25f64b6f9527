import pytest

from braidring import cartan


@pytest.fixture(scope="session")
def a1():
    return cartan("A", 1)


@pytest.fixture(scope="session")
def a2():
    return cartan("A", 2)


@pytest.fixture(scope="session")
def a3():
    return cartan("A", 3)


@pytest.fixture(scope="session")
def a4():
    return cartan("A", 4)


@pytest.fixture(scope="session")
def d4():
    return cartan("D", 4)


@pytest.fixture(scope="session")
def e6():
    return cartan("E", 6)
