import pytest

from absorb.ideals import ideal_from_generators
from absorb.rings import make_product, make_zn


@pytest.fixture(scope="session")
def z18():
    return make_zn(18)


@pytest.fixture(scope="session")
def z12():
    return make_zn(12)


@pytest.fixture(scope="session")
def z8():
    return make_zn(8)


@pytest.fixture(scope="session")
def z4():
    return make_zn(4)


@pytest.fixture(scope="session")
def z6():
    return make_zn(6)


@pytest.fixture(scope="session")
def z2_4():
    """Direct product of four copies of the two-element ring."""
    return make_product([make_zn(2)] * 4)


@pytest.fixture(scope="session")
def z2xz3():
    return make_product([make_zn(2), make_zn(3)])


def ideal_of(ring, *gens):
    return ideal_from_generators(ring, gens)
