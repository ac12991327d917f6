from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dclifford.core.config import settings as app_settings
from dclifford.core.exceptions import RejectedInputError
from dclifford.services.exact_algebra import CliffordElement
from dclifford.services.factorial_basis import (
    factorial_recurrence_holds,
    homogeneous_power,
    limit_check,
    shift,
    shift_by_monomials,
    squared_norm_polynomial,
)
from dclifford.services.factorial_powers import (
    FamilySign,
    StirlingTable,
    factorial_power_eval,
    factorial_to_monomial,
    factorial_to_monomial_1d,
    monomial_to_factorial_1d,
    nested_sum_coefficient,
    printed_factorial_to_monomial_1d,
    printed_monomial_to_factorial_1d,
)
from dclifford.services.lattice_polynomial import LatticePolynomial
from tests.strategies import families, meshes, polynomials, rationals

MINUS, PLUS = FamilySign.MINUS, FamilySign.PLUS


class TestFactorialPowers:
    @pytest.mark.parametrize("s,family,h,x,expected", [
        (0, MINUS, 1, 5, 1),
        (2, MINUS, 1, 3, 6),
        (3, PLUS, Fraction(1, 2), 1, 3),
        (3, MINUS, 1, 2, 0),
        (2, PLUS, 2, -2, 0),
    ])
    def test_eval(self, s, family, h, x, expected):
        assert factorial_power_eval(s, family, h, x) == expected

    def test_negative_degree_is_rejected(self):
        with pytest.raises(RejectedInputError):
            factorial_power_eval(-1, MINUS, 1, 0)

    def test_family_parse(self):
        assert FamilySign.parse("+") is PLUS
        assert FamilySign.parse(MINUS) is MINUS
        assert FamilySign.matched_to(1) is MINUS
        assert FamilySign.matched_to(-1) is PLUS
        with pytest.raises(RejectedInputError, match="family must be"):
            FamilySign.parse("*")

    @settings(max_examples=80, deadline=None)
    @given(st.integers(min_value=0, max_value=6), families, meshes, rationals)
    def test_recurrence(self, s, family, h, x):
        assert factorial_recurrence_holds(s, family, h, x)


class TestStirlingConversions:
    def test_square(self):
        assert factorial_to_monomial_1d(2, MINUS, 1) == {2: 1, 1: -1}
        assert monomial_to_factorial_1d(2, MINUS, 1) == {2: 1, 1: 1}
        assert monomial_to_factorial_1d(2, PLUS, Fraction(1, 2)) == {2: 1, 1: Fraction(-1, 2)}

    def test_x_squared_in_the_factorial_basis(self):
        x_squared = LatticePolynomial.from_monomials(1, 1, MINUS, {(2,): CliffordElement.scalar(1)})
        expected = LatticePolynomial(1, 1, MINUS, {
            (2,): CliffordElement.scalar(1), (1,): CliffordElement.scalar(1),
        })
        assert x_squared == expected

    @settings(max_examples=80, deadline=None)
    @given(st.integers(min_value=0, max_value=7), families, meshes, rationals)
    def test_expansion_matches_product(self, a, family, h, x):
        coefficients = factorial_to_monomial_1d(a, family, h)
        assert sum(c * x ** k for k, c in coefficients.items()) == factorial_power_eval(a, family, h, x)

    @settings(max_examples=80, deadline=None)
    @given(st.integers(min_value=0, max_value=7), families, meshes, rationals)
    def test_inverse_expansion(self, a, family, h, x):
        coefficients = monomial_to_factorial_1d(a, family, h)
        assert sum(d * factorial_power_eval(k, family, h, x) for k, d in coefficients.items()) == x ** a

    def test_multi_index_expansion_is_a_product(self):
        expansion = factorial_to_monomial((2, 1), MINUS, 1)
        assert expansion == {(2, 1): 1, (1, 1): -1}

    def test_cap(self):
        table = StirlingTable("first", cap=4)
        assert table[4, 2] == 11
        assert table.unsigned(3, 1) == 2
        with pytest.raises(RejectedInputError, match="Stirling cap"):
            table[5, 1]
        assert StirlingTable("second")[4, 2] == 7
        with pytest.raises(RejectedInputError):
            StirlingTable("third")

    @pytest.mark.parametrize("family,to_monomial,to_factorial", [
        (MINUS, {1: 2, 2: -3, 3: 1}, {1: 1, 2: 3, 3: 1}),
        (PLUS, {1: 2, 2: 3, 3: 1}, {1: 1, 2: -3, 3: 1}),
    ])
    def test_printed_tables_for_cubes(self, family, to_monomial, to_factorial):
        assert printed_factorial_to_monomial_1d(3, family) == to_monomial
        assert printed_monomial_to_factorial_1d(3, family) == to_factorial
        assert printed_factorial_to_monomial_1d(0, family) == {0: 1}

    @pytest.mark.parametrize("a", range(8))
    def test_printed_tables_agree_with_the_mesh_one_conversion(self, a):
        for family in (MINUS, PLUS):
            assert printed_factorial_to_monomial_1d(a, family) == factorial_to_monomial_1d(a, family, 1)
            assert printed_monomial_to_factorial_1d(a, family) == monomial_to_factorial_1d(a, family, 1)

    def test_nested_sum_in_one_dimension_is_the_table(self):
        assert nested_sum_coefficient((3,), 2, MINUS, "second") == printed_monomial_to_factorial_1d(3, MINUS)[2]
        assert nested_sum_coefficient((2,), 1, MINUS, "first") == -1


class TestBasisHelpers:
    @settings(max_examples=40, deadline=None)
    @given(polynomials(n=2, max_degree=3), st.sampled_from([1, 2]), st.sampled_from([1, -1]))
    def test_shift_agrees_with_binomial_expansion(self, p, axis, direction):
        assert shift(p, axis, direction) == shift_by_monomials(p, axis, direction)

    def test_shift_moves_the_argument(self):
        p = LatticePolynomial.monomial(1, 1, MINUS, (2,))
        assert shift(p, 1, 1).evaluate([2]) == p.evaluate([3])
        assert shift(p, 1, -1).evaluate([2]) == p.evaluate([1])
        with pytest.raises(RejectedInputError):
            shift(p, 1, 2)

    def test_homogeneous_powers(self):
        h2 = homogeneous_power(2, 2, MINUS, 1)
        assert str(h2) == "-X2^(2) e0 - X1^(2) e0"
        h1 = homogeneous_power(1, 2, MINUS, 1)
        assert str(h1) == "X2^(1) e2 + X1^(1) e1"
        assert homogeneous_power(0, 3, PLUS, 1) == LatticePolynomial.constant(3, 1, PLUS, CliffordElement.scalar(3))

    def test_squared_norm(self):
        norm = squared_norm_polynomial(1, 1, MINUS)
        assert str(norm) == "X1^(1) e0 + X1^(2) e0"
        assert squared_norm_polynomial(2, Fraction(1, 2), PLUS).evaluate([3, -1]) == CliffordElement.scalar(2, 10)


class TestLimitCheck:
    @pytest.mark.parametrize("family", [MINUS, PLUS])
    @pytest.mark.parametrize("s", [1, 2, 3, 4])
    def test_ratios_settle_near_two(self, s, family):
        check = limit_check((s,), family)
        low, high = app_settings.limit_ratio_bounds()
        assert len(check.deviations) == app_settings.limit_levels
        assert check.contracts_within(low, high, app_settings.limit_window_start)

    def test_first_degree_is_exact(self):
        assert limit_check((1,), MINUS).exact

    def test_coarse_ratios_are_outside_the_band(self):
        check = limit_check((3,), MINUS)
        assert check.ratios[0] == Fraction(8, 5)
        assert not check.contracts_within(Fraction(9, 5), Fraction(11, 5), 1)

    def test_deviation_of_a_square(self):
        check = limit_check((2,), MINUS, point=[1])
        assert check.deviations == tuple(Fraction(1, 2 ** level) for level in range(1, 7))
        assert all(r == 2 for r in check.ratios)
