import pytest

from lpacenter import corpus


@pytest.fixture(scope="session")
def graphs():
    return corpus.load_all()


@pytest.fixture(scope="session")
def loop(graphs):
    return graphs["loop"]


@pytest.fixture(scope="session")
def a3(graphs):
    return graphs["a3"]


@pytest.fixture(scope="session")
def toeplitz(graphs):
    return graphs["toeplitz"]


@pytest.fixture(scope="session")
def rose2(graphs):
    return graphs["rose2"]


@pytest.fixture(scope="session")
def infbundle(graphs):
    return graphs["infbundle"]


@pytest.fixture(scope="session")
def twocycles(graphs):
    return graphs["twocycles"]


@pytest.fixture(scope="session")
def entry(graphs):
    return graphs["entry"]


@pytest.fixture(scope="session")
def sink_tree(graphs):
    return graphs["sink_tree"]
