import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from dclifford.core.exceptions import InfeasibleError, RejectedInputError
from dclifford.services import quaternion_dirac
from dclifford.services.exact_algebra import QUATERNION_BLADES, CliffordElement, quaternion_unit
from dclifford.services.factorial_powers import FamilySign
from dclifford.services.lattice_polynomial import LatticePolynomial
from dclifford.services.quaternion_dirac import (
    GAMMA_TRANSCRIPTIONS,
    GammaTranscription,
    MixedVariant,
    QuaternionLatticePolynomial,
    TranscriptionResolution,
    apply_mixed_dirac,
    block_form,
    discrete_curl,
    discrete_div,
    discrete_grad,
    euler_gamma_identity_defect,
    kernel_dimensions,
    mixed_kernel,
    multiply_by_quaternion_variable,
    quaternionic_euler_gamma,
    random_quaternion,
    resolve_gamma_transcription,
    verify_laplacian_factorization,
)
from tests.strategies import homogeneous_polynomials, meshes

MINUS_PLUS, PLUS_MINUS = MixedVariant.MINUS_PLUS, MixedVariant.PLUS_MINUS

variants = st.sampled_from([MINUS_PLUS, PLUS_MINUS])


@st.composite
def quaternions(draw, family=None):
    h = draw(meshes)
    family = draw(st.sampled_from([FamilySign.MINUS, FamilySign.PLUS])) if family is None else family
    degree = draw(st.integers(min_value=0, max_value=2))
    return QuaternionLatticePolynomial(
        draw(homogeneous_polynomials(3, degree, h, family, QUATERNION_BLADES))
    )


def _scalar(h, alpha, value=1):
    return LatticePolynomial.monomial(3, h, FamilySign.MINUS, alpha, CliffordElement.scalar(3, value))


class TestVariants:
    def test_signs(self):
        assert MINUS_PLUS.outer == -1 and MINUS_PLUS.inner == 1
        assert MINUS_PLUS.family is FamilySign.PLUS
        assert PLUS_MINUS.family is FamilySign.MINUS
        assert MINUS_PLUS.twin is PLUS_MINUS

    def test_parse(self):
        assert MixedVariant.parse(" +- ") is PLUS_MINUS
        with pytest.raises(RejectedInputError, match="variant must be"):
            MixedVariant.parse("++")


class TestQuaternionPolynomial:
    def test_join_and_components(self):
        parts = [_scalar(1, (1, 0, 0), value) for value in (1, 2, 3, 4)]
        q = QuaternionLatticePolynomial.join(parts)
        assert q.components() == tuple(parts)
        assert q.scalar == parts[0]
        assert q.vector == tuple(parts[1:])
        assert q.polynomial.coefficient((1, 0, 0)) == (
            CliffordElement.scalar(3) + quaternion_unit(1).scale(2)
            + quaternion_unit(2).scale(3) + quaternion_unit(3).scale(4)
        )

    def test_rejects_odd_blades(self):
        p = LatticePolynomial.monomial(3, 1, FamilySign.MINUS, (0, 0, 0), CliffordElement.basis(3, 1))
        with pytest.raises(RejectedInputError, match="odd blades"):
            QuaternionLatticePolynomial(p)

    def test_rejects_other_dimensions(self):
        with pytest.raises(RejectedInputError, match="need n = 3"):
            QuaternionLatticePolynomial(LatticePolynomial.monomial(2, 1, FamilySign.MINUS, (1, 0)))
        with pytest.raises(RejectedInputError, match="need n = 3"):
            multiply_by_quaternion_variable(LatticePolynomial.monomial(2, 1, FamilySign.MINUS, (1, 0)))

    def test_components_must_be_scalar(self):
        vector_valued = LatticePolynomial.monomial(3, 1, FamilySign.MINUS, (1, 0, 0), quaternion_unit(1))
        parts = [vector_valued] + [vector_valued.like()] * 3
        with pytest.raises(RejectedInputError, match="component 0 must be scalar-valued"):
            QuaternionLatticePolynomial.join(parts)
        with pytest.raises(RejectedInputError, match="four components"):
            QuaternionLatticePolynomial.join(parts[:3])


class TestMixedDirac:
    @settings(max_examples=20, deadline=None)
    @given(variants, st.data())
    def test_matrix_equals_block_form(self, variant, data):
        f = data.draw(quaternions(variant.family))
        assert apply_mixed_dirac(variant, f) == block_form(variant, f)

    @settings(max_examples=20, deadline=None)
    @given(quaternions())
    def test_factorizes_the_laplacian(self, f):
        assert verify_laplacian_factorization(f).holds

    @settings(max_examples=20, deadline=None)
    @given(quaternions(), st.sampled_from([1, -1]))
    def test_vector_identities(self, f, sign):
        assert discrete_div(sign, discrete_curl(sign, f.vector)).is_zero()
        assert all(part.is_zero() for part in discrete_curl(sign, discrete_grad(sign, f.scalar)))

    def test_derivative_of_a_coordinate(self):
        f = QuaternionLatticePolynomial(_scalar(1, (1, 0, 0)).with_family(FamilySign.PLUS))
        image = apply_mixed_dirac(MINUS_PLUS, f)
        assert image.components()[1] == f.polynomial.like({(0, 0, 0): CliffordElement.scalar(3)})
        assert image.scalar.is_zero()

    def test_kernel_dimensions(self):
        assert kernel_dimensions(1, MINUS_PLUS, 1) == {0: 4, 1: 8}
        basis = mixed_kernel(1, Fraction(1, 2), PLUS_MINUS)
        assert basis.operator == "D+-"
        assert all(apply_mixed_dirac(PLUS_MINUS, m).is_zero() for m in basis.elements)


class TestGammaTranscription:
    def test_candidates_are_readings_of_the_table(self):
        names = [t.name for t in GAMMA_TRANSCRIPTIONS]
        assert names[0] == "printed"
        assert len(set(names)) == 8
        assert "derived" not in names
        with pytest.raises(RejectedInputError, match="transcription must be one of"):
            GammaTranscription.parse("derived")

    @pytest.mark.parametrize("variant", [MINUS_PLUS, PLUS_MINUS])
    def test_chosen_reading_comes_from_the_table(self, variant, rng):
        resolution = resolve_gamma_transcription(variant)
        assert resolution.chosen == "block-sign+odd-orientation"
        reading = GammaTranscription.parse(resolution.chosen)
        assert reading.header == (0, 1, 2)
        for h in (1, Fraction(1, 2)):
            for degree in (1, 2, 3):
                f = random_quaternion(rng, h, variant.family, degree)
                assert euler_gamma_identity_defect(variant, f, reading).is_zero()

    @pytest.mark.parametrize("name", ["printed", "block-sign", "fourth-header", "block-sign+fourth-header"])
    def test_header_and_sign_repairs_alone_fail(self, name):
        verdicts = {v.transcription: v for v in resolve_gamma_transcription(MINUS_PLUS).verdicts}
        verdict = verdicts[name]
        assert not verdict.consistent
        assert verdict.witness and verdict.defect

    def test_rejected_transcriptions_carry_a_witness(self):
        resolution = resolve_gamma_transcription(MINUS_PLUS)
        for verdict in resolution.verdicts:
            assert verdict.consistent == (verdict.witness is None)

    def test_unresolved_table_is_not_replaced(self, monkeypatch):
        monkeypatch.setattr(
            quaternion_dirac, "resolve_gamma_transcription",
            lambda variant, h: TranscriptionResolution(variant, None),
        )
        f = random_quaternion(random.Random(0), 1, MINUS_PLUS.family, 1)
        with pytest.raises(InfeasibleError, match="no reading of the Gamma"):
            quaternionic_euler_gamma(MINUS_PLUS, f)
