import pytest

from altcomm import PrimeField, RationalField, matrix_algebra, peirce_decompose, zorn

Q = RationalField()
F5 = PrimeField(5)


@pytest.fixture(scope="session")
def m2q():
    return matrix_algebra(Q, 2)


@pytest.fixture(scope="session")
def m3q():
    return matrix_algebra(Q, 3)


@pytest.fixture(scope="session")
def zornq():
    return zorn(Q)


@pytest.fixture(scope="session")
def m2f5():
    return matrix_algebra(F5, 2)


@pytest.fixture(scope="session")
def zornf5():
    return zorn(F5)


@pytest.fixture(scope="session")
def m2q_pd(m2q):
    return peirce_decompose(*m2q)


@pytest.fixture(scope="session")
def m3q_pd(m3q):
    return peirce_decompose(*m3q)


@pytest.fixture(scope="session")
def zornq_pd(zornq):
    return peirce_decompose(*zornq)


@pytest.fixture(scope="session")
def m2f5_pd(m2f5):
    return peirce_decompose(*m2f5)


@pytest.fixture(scope="session")
def zornf5_pd(zornf5):
    return peirce_decompose(*zornf5)
