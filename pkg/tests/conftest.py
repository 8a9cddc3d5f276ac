import pytest

from ciflie import PrimeField, abelian_superalgebra, superalgebra_from_pairs


@pytest.fixture(scope="session")
def F3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def H(F3):
    """Two-dimensional test algebra: e even, f odd, [f, f] = e."""
    return superalgebra_from_pairs(F3, (0, 1), {(1, 1): (1, 0)})


@pytest.fixture(scope="session")
def L3(F3):
    """Three-dimensional algebra: central even e, odd f, g with a
    nondegenerate symmetric bracket form on the odd part."""
    return superalgebra_from_pairs(
        F3,
        (0, 1, 1),
        {(1, 1): (1, 0, 0), (1, 2): (1, 0, 0), (2, 2): (2, 0, 0)},
    )


@pytest.fixture(scope="session")
def AB2(F3):
    """Abelian algebra on one even and one odd coordinate."""
    return abelian_superalgebra(F3, (0, 1))
