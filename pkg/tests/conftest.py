import pytest

from ordercodes import (
    build_field,
    grassmann_presentation,
    hermitian_presentation,
    hermitian_variety,
    rational_points,
    verify_gp,
)


@pytest.fixture(scope="session")
def gf4():
    return build_field(2, 2)


@pytest.fixture(scope="session")
def gf9():
    return build_field(3, 2)


@pytest.fixture(scope="session")
def herm22():
    P = hermitian_presentation(2, 2)
    verify_gp(P)
    return P


@pytest.fixture(scope="session")
def herm22_points():
    return rational_points(hermitian_variety(2, 2))


@pytest.fixture(scope="session")
def g35_gf2():
    return grassmann_presentation(3, 5, build_field(2, 1))


@pytest.fixture(scope="session")
def g35_gf3():
    return grassmann_presentation(3, 5, build_field(3, 1))
