import pytest

from ghw.cli import build_matroid, load_input
from ghw.matroid import DEFAULT_MAX_GROUND

from workeddata import DATA


def load_matroid(name):
    return build_matroid(load_input(str(DATA / name)), DEFAULT_MAX_GROUND)


@pytest.fixture(scope="session")
def m1():
    return load_matroid("h1.txt")


@pytest.fixture(scope="session")
def m2():
    return load_matroid("h2.txt")


@pytest.fixture(scope="session")
def m3():
    return load_matroid("h3.txt")


@pytest.fixture(scope="session")
def m4():
    return load_matroid("h4.txt")


@pytest.fixture(scope="session")
def m5():
    return load_matroid("h5.txt")


@pytest.fixture(scope="session")
def m6():
    return load_matroid("h6.txt")


@pytest.fixture(scope="session")
def m7():
    # g7.txt holds a generator matrix; the parity check matroid is its dual
    return load_matroid("g7.txt").dual()


@pytest.fixture(scope="session")
def m8():
    return load_matroid("h8.txt")


@pytest.fixture(scope="session")
def m9():
    return load_matroid("h9.txt")
