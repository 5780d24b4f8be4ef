import pytest

from weylchar import modified_datum, root_datum


@pytest.fixture(scope="session")
def a1():
    return root_datum("A", 1)


@pytest.fixture(scope="session")
def a2():
    return root_datum("A", 2)


@pytest.fixture(scope="session")
def b2():
    return root_datum("B", 2)


@pytest.fixture(scope="session")
def g2():
    return root_datum("G", 2)


@pytest.fixture(scope="session")
def md_b2(b2):
    """B2 at ell = d = 2: the paper's worked example, dual of type C2."""
    return modified_datum(b2, 2)
