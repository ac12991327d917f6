import random
from fractions import Fraction

import pytest

from dclifford.services.factorial_powers import FamilySign
from dclifford.services.lattice_polynomial import LatticePolynomial


@pytest.fixture
def rng():
    """Seeded generator so random inputs are the same on every run."""
    return random.Random(1234)


@pytest.fixture(params=[Fraction(1), Fraction(1, 2)], ids=["h=1", "h=1/2"])
def mesh(request):
    return request.param


@pytest.fixture(params=[FamilySign.MINUS, FamilySign.PLUS], ids=["minus", "plus"])
def family(request):
    return request.param


@pytest.fixture
def plane():
    """Factory for polynomials on hZ^2, h = 1, family -."""
    def build(terms):
        return LatticePolynomial(2, 1, FamilySign.MINUS, terms)

    return build


@pytest.fixture
def x1_e0():
    """``X1^(1) e0`` on hZ^2 with h = 1, family -."""
    return LatticePolynomial.monomial(2, 1, FamilySign.MINUS, (1, 0))

