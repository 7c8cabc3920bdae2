import pytest

from logtangent.fields import QQ, PrimeField
from logtangent.poly import PolyRing


@pytest.fixture(scope="session")
def qq4():
    return PolyRing(QQ, 4)


@pytest.fixture(scope="session")
def qq3():
    return PolyRing(QQ, 3)


@pytest.fixture(scope="session")
def fp4():
    return PolyRing(PrimeField(32003), 4)
