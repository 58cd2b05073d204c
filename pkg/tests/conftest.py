import functools

import pytest

from cremona.families import construct, explicit_example, make_loria
from cremona.polynomial import Ring


@functools.lru_cache(maxsize=None)
def built(family, seed):
    return construct(family, seed)


@pytest.fixture
def R4():
    return Ring("z0 z1 z2 z3")


@pytest.fixture(scope="session")
def det1():
    return built("D", 1)


@pytest.fixture(scope="session")
def explicit():
    return explicit_example()


@pytest.fixture(scope="session")
def loria():
    return make_loria()
