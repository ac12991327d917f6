from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dclifford.core.exceptions import RejectedInputError
from dclifford.services.exact_algebra import (
    CliffordElement,
    QuaternionView,
    as_rational,
    blade_from_label,
    blade_label,
    blade_product,
    format_rational,
    hamilton_left_matrix,
    multi_indices,
    ordered_blade,
    positive_mesh,
    printed_variable_matrix,
    quaternion_unit,
    validate_multi_index,
)
from tests.strategies import clifford_elements, rationals


class TestRationals:
    @pytest.mark.parametrize("text,expected", [
        ("3", Fraction(3)),
        ("-3/4", Fraction(-3, 4)),
        (" 2/6 ", Fraction(1, 3)),
        (5, Fraction(5)),
    ])
    def test_accepts_exact_forms(self, text, expected):
        assert as_rational(text) == expected

    @pytest.mark.parametrize("value", [1.5, "1.5", "1/0", "x", "", True])
    def test_rejects_floats_and_malformed_text(self, value):
        with pytest.raises(RejectedInputError):
            as_rational(value)

    @pytest.mark.parametrize("h", ["0", "-1/2", 0])
    def test_mesh_must_be_positive(self, h):
        with pytest.raises(RejectedInputError, match="mesh width must be positive"):
            positive_mesh(h)

    def test_format(self):
        assert format_rational(Fraction(4, 2)) == "2"
        assert format_rational(Fraction(-1, 2)) == "-1/2"


class TestMultiIndices:
    def test_lexicographic_order(self):
        assert multi_indices(2, 2) == [(0, 2), (1, 1), (2, 0)]
        assert multi_indices(3, 0) == [(0, 0, 0)]
        assert multi_indices(2, -1) == []

    def test_counts(self):
        assert len(multi_indices(3, 2)) == 6
        assert len(multi_indices(3, 4)) == 15

    @pytest.mark.parametrize("alpha", [(1,), (1, -1), (1, 2, 3)])
    def test_validation(self, alpha):
        with pytest.raises(RejectedInputError):
            validate_multi_index(alpha, 2)


class TestBlades:
    def test_labels(self):
        assert blade_label(0) == "0"
        assert blade_label(0b101) == "13"
        assert blade_from_label("13", 3) == 0b101
        with pytest.raises(RejectedInputError, match="exceeds dimension"):
            blade_from_label("14", 3)
        with pytest.raises(RejectedInputError, match="not sorted"):
            blade_from_label("21", 3)

    def test_generators_square_to_minus_one(self):
        for axis in range(3):
            assert blade_product(1 << axis, 1 << axis) == (-1, 0)

    def test_generators_anticommute(self):
        assert blade_product(0b01, 0b10) == (1, 0b11)
        assert blade_product(0b10, 0b01) == (-1, 0b11)

    def test_ordered_blade(self):
        assert ordered_blade([2, 1], 2) == (-1, 0b11)
        assert ordered_blade([1, 2, 1], 2) == (1, 0b10)
        with pytest.raises(RejectedInputError, match="blade index 3 exceeds dimension 2"):
            ordered_blade([3], 2)


class TestCliffordElement:
    def test_bivector_squares_to_minus_one(self):
        e12 = CliffordElement.basis(3, 1, 2)
        assert e12 * e12 == CliffordElement.scalar(3, -1)

    def test_conjugation_signs(self):
        assert CliffordElement.basis(3, 1).conjugate() == -CliffordElement.basis(3, 1)
        assert CliffordElement.basis(3, 1, 2).conjugate() == -CliffordElement.basis(3, 1, 2)
        assert CliffordElement.basis(3, 1, 2, 3).conjugate() == CliffordElement.basis(3, 1, 2, 3)

    def test_norm_squared(self):
        a = CliffordElement(1, {0: 2, 1: 3})
        assert a.norm_squared() == 13

    def test_zero_coefficients_are_dropped(self):
        a = CliffordElement(2, {0: 0, 1: "1/2"})
        assert a.items() == [(1, Fraction(1, 2))]
        assert (a - a).is_zero()

    def test_dimension_mismatch(self):
        with pytest.raises(RejectedInputError):
            CliffordElement.scalar(2) + CliffordElement.scalar(3)

    def test_format(self):
        assert CliffordElement(2, {0: 1, 3: Fraction(-1, 2)}).format() == "e0 - 1/2 e12"
        assert CliffordElement.zero(2).format() == "0"

    @settings(max_examples=60, deadline=None)
    @given(clifford_elements(3), clifford_elements(3), clifford_elements(3))
    def test_product_is_associative(self, a, b, c):
        assert (a * b) * c == a * (b * c)

    @settings(max_examples=60, deadline=None)
    @given(clifford_elements(3), clifford_elements(3))
    def test_conjugation_reverses_products(self, a, b):
        assert (a * b).conjugate() == b.conjugate() * a.conjugate()

    @settings(max_examples=60, deadline=None)
    @given(clifford_elements(3))
    def test_norm_is_sum_of_squares(self, a):
        assert a.norm_squared() == sum(v * v for _, v in a.items())


class TestQuaternions:
    def test_hamilton_relations(self):
        i, j, k = (quaternion_unit(index) for index in (1, 2, 3))
        minus_one = CliffordElement.scalar(3, -1)
        assert i * j == k
        assert j * k == i
        assert k * i == j
        assert i * i == j * j == k * k == minus_one

    @settings(max_examples=60, deadline=None)
    @given(st.lists(rationals, min_size=4, max_size=4), st.lists(rationals, min_size=4, max_size=4))
    def test_view_agrees_with_clifford_product(self, a, b):
        p, q = QuaternionView.from_column(a), QuaternionView.from_column(b)
        assert (p * q).to_clifford() == p.to_clifford() * q.to_clifford()
        assert p.matrix_product(q) == p * q
        assert QuaternionView.from_clifford(p.to_clifford()) == p

    def test_odd_blades_have_no_quaternion(self):
        with pytest.raises(RejectedInputError, match="odd blades e1"):
            QuaternionView.from_clifford(CliffordElement.basis(3, 1))

    def test_printed_variable_matrix_differs_from_left_multiplication(self):
        m = (Fraction(1), Fraction(2), Fraction(3))
        printed = printed_variable_matrix(*m)
        hamilton = hamilton_left_matrix((Fraction(0),) + m)
        assert printed[2][3] == 1
        assert hamilton[2][3] == -1
        differing = [index for index, (a, b) in enumerate(zip(printed, hamilton)) if a != b]
        assert differing == [2]
