import pytest

from grasym import make_field, rationals


@pytest.fixture(scope="session")
def q():
    return rationals()


@pytest.fixture(scope="session")
def f2():
    return make_field(2)


@pytest.fixture(scope="session")
def f3():
    return make_field(3)


@pytest.fixture(scope="session")
def f5():
    return make_field(5)


@pytest.fixture(scope="session")
def f4():
    return make_field(2, [1, 1, 1])


@pytest.fixture(scope="session")
def f9():
    return make_field(3, [1, 0, 1])


@pytest.fixture(scope="session")
def f27():
    return make_field(3, [-1, -1, 0, 1])
