import pytest

from fdsc import build_graph, make_dim


@pytest.fixture(scope="session")
def fdsc2():
    return build_graph(make_dim(1))


@pytest.fixture(scope="session")
def fdsc4():
    return build_graph(make_dim(2))


@pytest.fixture(scope="session")
def fdsc8():
    return build_graph(make_dim(3))


@pytest.fixture(scope="session")
def fdsc16():
    return build_graph(make_dim(4))


@pytest.fixture(scope="session")
def dsc8():
    return build_graph(make_dim(3), "dsc")
