from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dclifford.core.exceptions import RejectedInputError
from dclifford.services.exact_algebra import CliffordElement
from dclifford.services.factorial_powers import FamilySign
from dclifford.services.lattice_polynomial import (
    DirectSumBasis,
    GradedComponentBasis,
    LatticePolynomial,
    evaluate,
    format_polynomial,
)
from tests.strategies import polynomials, rationals

MINUS, PLUS = FamilySign.MINUS, FamilySign.PLUS

points = st.lists(st.integers(min_value=-3, max_value=3), min_size=2, max_size=2)


def _value_at(p, point):
    """Evaluate through the ordinary monomial expansion."""
    total = CliffordElement.zero(p.n)
    for beta, coeff in p.to_monomials().items():
        weight = Fraction(1)
        for s, x in zip(beta, point):
            weight *= Fraction(x) ** s
        total = total + coeff.scale(weight)
    return total


class TestConstruction:
    def test_like_terms_merge_and_zeros_vanish(self):
        e1 = CliffordElement.basis(2, 1)
        p = LatticePolynomial(2, 1, MINUS, {(1, 0): e1, (0, 1): e1 - e1})
        assert p.items() == [((1, 0), e1)]
        assert (p - p).is_zero()
        assert (p - p).degree == -1

    def test_rejects_bad_input(self):
        with pytest.raises(RejectedInputError, match="dimension must be a positive integer"):
            LatticePolynomial(0, 1, MINUS)
        with pytest.raises(RejectedInputError, match="does not match n=2"):
            LatticePolynomial(2, 1, MINUS, {(1, 0): CliffordElement.scalar(3)})
        with pytest.raises(RejectedInputError, match="has length 1"):
            LatticePolynomial(2, 1, MINUS, {(1,): CliffordElement.scalar(2)})

    @pytest.mark.parametrize("other,message", [
        (LatticePolynomial.monomial(2, "1/2", MINUS, (1, 0)), "mismatched mesh width: 1 vs 1/2"),
        (LatticePolynomial.monomial(2, 1, PLUS, (1, 0)), "mismatched family"),
        (LatticePolynomial.monomial(1, 1, MINUS, (1,)), "mismatched dimension"),
    ])
    def test_context_mismatch(self, x1_e0, other, message):
        with pytest.raises(RejectedInputError, match=message):
            x1_e0 + other

    def test_grading(self, plane):
        e0 = CliffordElement.scalar(2)
        p = plane({(0, 0): e0, (1, 1): e0, (2, 0): e0.scale(3)})
        assert p.degrees() == [0, 2]
        assert not p.is_homogeneous()
        assert p.graded_component(2) == plane({(1, 1): e0, (2, 0): e0.scale(3)})
        assert set(p.graded_components()) == {0, 2}


class TestCalculus:
    def test_evaluate(self):
        p = LatticePolynomial.monomial(1, 1, MINUS, (2,))
        assert evaluate(p, [3]) == CliffordElement.scalar(1, 6)
        with pytest.raises(RejectedInputError, match="point has 2 coordinates, expected 1"):
            evaluate(p, [1, 2])

    def test_coordinate_product(self):
        x = LatticePolynomial.monomial(1, 1, MINUS, (1,))
        assert str(x.multiply_by_coordinate(1)) == "X1^(1) e0 + X1^(2) e0"
        y = LatticePolynomial.monomial(1, 1, PLUS, (1,))
        assert str(y.multiply_by_coordinate(1)) == "-X1^(1) e0 + X1^(2) e0"

    def test_vector_variable(self, x1_e0):
        assert str(x1_e0.multiply_by_vector_variable()) == "X1^(1) e1 + X1^(1) X2^(1) e2 + X1^(2) e1"

    def test_matched_difference(self, plane):
        e12 = CliffordElement.basis(2, 1, 2)
        p = plane({(2, 1): e12})
        assert p.matched_difference(1) == plane({(1, 1): e12.scale(2)})
        with pytest.raises(RejectedInputError, match="axis 3 exceeds dimension 2"):
            p.matched_difference(3)

    @settings(max_examples=50, deadline=None)
    @given(polynomials(n=2, max_degree=3), points)
    def test_factorial_and_monomial_values_agree(self, p, point):
        assert evaluate(p, point) == _value_at(p, point)

    @settings(max_examples=50, deadline=None)
    @given(polynomials(n=2, max_degree=3))
    def test_monomial_round_trip(self, p):
        assert LatticePolynomial.from_monomials(p.n, p.h, p.family, p.to_monomials()) == p

    @settings(max_examples=40, deadline=None)
    @given(polynomials(n=2, max_degree=2, h=Fraction(1)), polynomials(n=2, max_degree=2, h=Fraction(1)), points)
    def test_product_is_pointwise(self, p, q, point):
        q = q.with_family(p.family)
        assert evaluate(p.multiply(q), point) == evaluate(p, point) * evaluate(q, point)

    @settings(max_examples=40, deadline=None)
    @given(polynomials(n=2, max_degree=3), points)
    def test_family_change_keeps_values(self, p, point):
        assert evaluate(p.with_family(p.family.opposite), point) == evaluate(p, point)

    @settings(max_examples=40, deadline=None)
    @given(polynomials(n=2, max_degree=3), rationals, points)
    def test_dilation(self, p, tau, point):
        assert evaluate(p.dilate(tau), point) == evaluate(p, [tau * x for x in point])


class TestFormatting:
    def test_canonical_text(self, plane):
        p = plane({
            (1, 0): CliffordElement.scalar(2, Fraction(1, 2)),
            (0, 1): CliffordElement.basis(2, 1, 2).scale(Fraction(-1, 2)),
        })
        assert format_polynomial(p) == "-1/2 X2^(1) e12 + 1/2 X1^(1) e0"
        assert format_polynomial(p.like()) == "0"
        assert format_polynomial(p.like({(0, 0): CliffordElement(2, {0: -1, 1: 3})})) == "-e0 + 3 e1"


class TestBases:
    def test_graded_component_size(self):
        basis = GradedComponentBasis(3, 1, MINUS, 2)
        assert basis.size == basis.expected_size() == 48
        quaternion = GradedComponentBasis(3, 1, MINUS, 2, (0b000, 0b110, 0b101, 0b011))
        assert quaternion.size == 24

    @settings(max_examples=30, deadline=None)
    @given(st.lists(rationals, min_size=12, max_size=12))
    def test_coordinates_round_trip(self, vector):
        basis = GradedComponentBasis(2, 1, MINUS, 2)
        p = basis.from_coordinates(vector)
        assert basis.coordinates(p) == vector

    def test_stray_terms(self, x1_e0):
        basis = GradedComponentBasis(2, 1, MINUS, 2)
        assert basis.stray_terms(x1_e0) == ["1 X1^(1) e0"]
        with pytest.raises(RejectedInputError, match="coordinates expects degree 2"):
            basis.coordinates(x1_e0)

    def test_direct_sum(self, x1_e0):
        basis = DirectSumBasis.up_to(2, 1, MINUS, 1)
        assert basis.size == 12
        assert basis.degrees == (0, 1)
        assert basis.from_coordinates(basis.coordinates(x1_e0)) == x1_e0
        with pytest.raises(RejectedInputError, match="share a context"):
            DirectSumBasis([GradedComponentBasis(2, 1, MINUS, 0), GradedComponentBasis(2, 1, PLUS, 1)])
