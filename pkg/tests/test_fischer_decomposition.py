from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dclifford.core.exceptions import RejectedInputError
from dclifford.services.difference_operators import DifferenceOperator
from dclifford.services.exact_algebra import QUATERNION_BLADES, CliffordElement
from dclifford.services.factorial_powers import FamilySign
from dclifford.services.fischer_decomposition import (
    decompose_in_space,
    dimension_accounting,
    fischer_decompose,
    fischer_inner_product,
    harmonic_fischer_decompose,
    harmonic_kernel,
    monogenic_kernel,
    monogenic_space,
    operator_form_inner_product,
    orthogonality_certificate,
)
from dclifford.services.lattice_polynomial import LatticePolynomial
from tests.strategies import families, homogeneous_polynomials, meshes, polynomials

MINUS, PLUS = FamilySign.MINUS, FamilySign.PLUS


class TestInnerProduct:
    def test_weights_are_factorials(self, plane):
        e12 = CliffordElement.basis(2, 1, 2)
        p = plane({(2, 1): e12.scale(3)})
        assert fischer_inner_product(p, p) == 2 * 9

    @settings(max_examples=50, deadline=None)
    @given(st.data())
    def test_matches_operator_form(self, data):
        p = data.draw(polynomials(n=2, max_degree=3))
        q = data.draw(polynomials(n=2, max_degree=3, h=p.h, family=p.family))
        assert fischer_inner_product(p, q) == operator_form_inner_product(p, q)

    @settings(max_examples=50, deadline=None)
    @given(polynomials(n=3, max_degree=2))
    def test_positive_definite(self, p):
        value = fischer_inner_product(p, p)
        assert value > 0 or p.is_zero()

    def test_context_must_match(self, x1_e0):
        with pytest.raises(RejectedInputError, match="mismatched family"):
            fischer_inner_product(x1_e0, x1_e0.with_family(PLUS))


class TestKernels:
    def test_monogenic_kernel_of_degree_one(self):
        basis = monogenic_kernel(1, 2, 1, MINUS)
        assert basis.dimension == 4
        assert basis.operator == "dh+"
        assert basis.verify(DifferenceOperator("dirac", 1))

    def test_harmonic_kernel_dimensions(self):
        assert harmonic_kernel(2, 3, 1, MINUS).dimension == 40
        assert harmonic_kernel(2, 3, 1, MINUS, QUATERNION_BLADES).dimension == 20

    def test_kernel_elements_are_annihilated(self, mesh, family):
        basis = monogenic_kernel(2, 2, mesh, family)
        assert basis.verify(DifferenceOperator("dirac", family.operator_sign))

    def test_negative_degree(self):
        with pytest.raises(RejectedInputError, match="degree must be non-negative"):
            monogenic_kernel(-1, 2, 1, MINUS)

    def test_sign_must_match_family(self):
        with pytest.raises(RejectedInputError, match="is not matched to family"):
            monogenic_space(2, 1, MINUS, sign=-1)

    @pytest.mark.parametrize("n,k", [(1, 3), (2, 2), (3, 1), (3, 2)])
    def test_dimension_accounting(self, n, k, mesh, family):
        assert dimension_accounting(k, n, mesh, family).holds

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_orthogonal_splitting(self, k, rng):
        certificate = orthogonality_certificate(k, 2, Fraction(1, 2), PLUS, trials=4, rng=rng)
        assert certificate.top_orthogonal
        assert certificate.adjoint_trials == 4
        assert certificate.adjoint_holds


class TestDecomposition:
    def test_coordinate_function(self, x1_e0):
        result = fischer_decompose(x1_e0)
        assert result.strategy == "exact"
        assert result.feasible and result.exact_feasible
        assert str(result.component(1)) == "-1/2 X2^(1) e12 + 1/2 X1^(1) e0"
        assert str(result.component(0)) == "-1/2 e1"
        assert result.residual.is_zero()
        assert result.kernel_dimensions == {1: 4, 0: 4}
        assert result.annihilated
        assert result.component(5) is None

    def test_graded_agrees_on_the_coordinate_function(self, x1_e0):
        exact = fischer_decompose(x1_e0, "exact")
        graded = fischer_decompose(x1_e0, "graded")
        assert graded.feasible
        assert graded.residual_contract_holds()
        assert graded.component(0) == exact.component(0)

    @settings(max_examples=12, deadline=None)
    @given(st.data())
    def test_graded_decomposition(self, data):
        h, family = data.draw(meshes), data.draw(families)
        degree = data.draw(st.integers(min_value=0, max_value=2))
        p = data.draw(homogeneous_polynomials(2, degree, h, family))
        result = fischer_decompose(p, "graded")
        assert result.feasible
        assert result.annihilated
        assert result.residual_contract_holds()
        assert [c.power for c in result.components] == list(range(degree + 1))

    def test_auto_reports_the_exact_attempt(self, x1_e0):
        p = x1_e0.multiply_by_coordinate(2).graded_component(2)
        result = fischer_decompose(p, "auto")
        assert result.exact_feasible is not None
        assert result.feasible
        assert result.residual_contract_holds()
        if not result.exact_feasible:
            assert result.strategy == "graded"
            assert result.diagnostics

    def test_harmonic_decomposition_of_a_square(self):
        p = LatticePolynomial.monomial(2, 1, MINUS, (2, 0))
        result = harmonic_fischer_decompose(p, "graded")
        assert result.feasible
        assert result.annihilated
        assert [c.degree for c in result.components] == [2, 0]

    def test_rejects_mixed_degrees(self, plane):
        p = plane({(0, 0): CliffordElement.scalar(2), (1, 0): CliffordElement.scalar(2)})
        with pytest.raises(RejectedInputError, match="needs a homogeneous polynomial"):
            fischer_decompose(p)

    def test_rejects_unknown_strategy(self, x1_e0):
        with pytest.raises(RejectedInputError, match="strategy must be one of"):
            fischer_decompose(x1_e0, "fastest")

    def test_rejects_foreign_context(self, x1_e0):
        space = monogenic_space(2, 1, PLUS)
        with pytest.raises(RejectedInputError, match="does not match the monogenic space"):
            decompose_in_space(space, x1_e0)
