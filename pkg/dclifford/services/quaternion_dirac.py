"""Quaternionic difference operators on the three-dimensional lattice.

A quaternion-valued polynomial ``f = f^0 + f^1 e_1 + f^2 e_2 + f^3 e_3`` is
stored as a Cl(0,3) polynomial over the even blades (see ``QUATERNION_BLADES``)
and handled here through its four scalar components. Operator tables are
indexed ``[component][column]`` with columns for the axes 1..3.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from dclifford.core.exceptions import ClosureError, InfeasibleError, RejectedInputError
from dclifford.core.logging import get_logger, log_structured
from dclifford.services.difference_operators import (
    apply_laplacian,
    apply_partial,
    assemble_matrix,
)
from dclifford.services.exact_algebra import (
    QUATERNION_BLADES,
    QUATERNION_SIGNS,
    CliffordElement,
    RationalLike,
    positive_mesh,
    quaternion_unit,
)
from dclifford.services.factorial_basis import shift
from dclifford.services.factorial_powers import FamilySign
from dclifford.services.fischer_decomposition import (
    FischerResult,
    FischerSpace,
    MonogenicBasis,
    decompose_in_space,
    harmonic_space,
)
from dclifford.services.lattice_polynomial import (
    GradedComponentBasis,
    LatticePolynomial,
    format_polynomial,
)
from dclifford.services.sampling import random_homogeneous

logger = get_logger(__name__)

Components = Tuple[LatticePolynomial, LatticePolynomial, LatticePolynomial, LatticePolynomial]
Vector = Tuple[LatticePolynomial, LatticePolynomial, LatticePolynomial]


class MixedVariant(str, Enum):
    """``D^{-+}`` (backward grad/div, forward curl) or its twin ``D^{+-}``."""
    MINUS_PLUS = "-+"
    PLUS_MINUS = "+-"

    @classmethod
    def parse(cls, value) -> "MixedVariant":
        if isinstance(value, MixedVariant):
            return value
        try:
            return cls(str(value).strip())
        except ValueError:
            raise RejectedInputError(f"variant must be '-+' or '+-', got '{value}'")

    @property
    def outer(self) -> int:
        """Sign of the differences in the grad and div blocks."""
        return -1 if self is MixedVariant.MINUS_PLUS else 1

    @property
    def inner(self) -> int:
        """Sign of the differences in the curl block."""
        return -self.outer

    @property
    def family(self) -> FamilySign:
        """Factorial family on which the grad/div block acts diagonally."""
        return FamilySign.matched_to(self.outer)

    @property
    def twin(self) -> "MixedVariant":
        return MixedVariant.PLUS_MINUS if self is MixedVariant.MINUS_PLUS else MixedVariant.MINUS_PLUS


def _require_three(p: LatticePolynomial) -> None:
    if p.n != 3:
        raise RejectedInputError(f"quaternionic operators need n = 3, got n = {p.n}")


class QuaternionLatticePolynomial:
    """A lattice polynomial on ``hZ^3`` with quaternion values."""

    __slots__ = ("polynomial",)

    def __init__(self, polynomial: LatticePolynomial):
        _require_three(polynomial)
        stray = set(polynomial.blades()) - set(QUATERNION_BLADES)
        if stray:
            raise RejectedInputError("polynomial has odd blades with no quaternion counterpart")
        self.polynomial = polynomial

    @classmethod
    def join(cls, components: Sequence[LatticePolynomial]) -> "QuaternionLatticePolynomial":
        if len(components) != 4:
            raise RejectedInputError("a quaternion polynomial has four components")
        first = components[0]
        result = LatticePolynomial.zero(3, first.h, first.family)
        for index, part in enumerate(components):
            _require_three(part)
            if set(part.blades()) - {0}:
                raise RejectedInputError(f"component {index} must be scalar-valued")
            result = result + part.left_multiply(quaternion_unit(index))
        return cls(result)

    @property
    def h(self):
        return self.polynomial.h

    @property
    def family(self) -> FamilySign:
        return self.polynomial.family

    def components(self) -> Components:
        out = []
        for blade, sign in zip(QUATERNION_BLADES, QUATERNION_SIGNS):
            out.append(self.polynomial.like({
                alpha: CliffordElement.scalar(3, sign * coeff.coefficient(blade))
                for alpha, coeff in self.polynomial.items()
            }))
        return tuple(out)

    @property
    def scalar(self) -> LatticePolynomial:
        return self.components()[0]

    @property
    def vector(self) -> Vector:
        return self.components()[1:]

    def is_zero(self) -> bool:
        return self.polynomial.is_zero()

    def __add__(self, other: "QuaternionLatticePolynomial") -> "QuaternionLatticePolynomial":
        return QuaternionLatticePolynomial(self.polynomial + other.polynomial)

    def __sub__(self, other: "QuaternionLatticePolynomial") -> "QuaternionLatticePolynomial":
        return QuaternionLatticePolynomial(self.polynomial - other.polynomial)

    def __neg__(self) -> "QuaternionLatticePolynomial":
        return QuaternionLatticePolynomial(-self.polynomial)

    def __eq__(self, other) -> bool:
        if not isinstance(other, QuaternionLatticePolynomial):
            return NotImplemented
        return self.polynomial == other.polynomial

    def __hash__(self) -> int:
        return hash(self.polynomial)

    def __str__(self) -> str:
        return format_polynomial(self.polynomial)


QuaternionLike = Union[QuaternionLatticePolynomial, LatticePolynomial]


def as_quaternion(f: QuaternionLike) -> QuaternionLatticePolynomial:
    if isinstance(f, QuaternionLatticePolynomial):
        return f
    return QuaternionLatticePolynomial(f)


# Matrix of the mixed Dirac operators for D^{-+}: (coefficient, difference sign, axis);
# D^{+-} flips every difference sign.
MIXED_DIRAC_MATRIX = (
    (None, (-1, -1, 1), (-1, -1, 2), (-1, -1, 3)),
    ((1, -1, 1), None, (-1, 1, 3), (1, 1, 2)),
    ((1, -1, 2), (1, 1, 3), None, (-1, 1, 1)),
    ((1, -1, 3), (-1, 1, 2), (1, 1, 1), None),
)


def mixed_dirac_matrix(variant: MixedVariant) -> Tuple[Tuple[Optional[Tuple[int, int, int]], ...], ...]:
    variant = MixedVariant.parse(variant)
    flip = 1 if variant is MixedVariant.MINUS_PLUS else -1
    return tuple(
        tuple(None if entry is None else (entry[0], flip * entry[1], entry[2]) for entry in row)
        for row in MIXED_DIRAC_MATRIX
    )


def apply_mixed_dirac(variant: MixedVariant, f: QuaternionLike) -> QuaternionLatticePolynomial:
    """Literal action of the 4x4 difference-operator matrix."""
    f = as_quaternion(f)
    parts = f.components()
    out = []
    for row in mixed_dirac_matrix(variant):
        total = parts[0].like()
        for column, entry in enumerate(row):
            if entry is None:
                continue
            coefficient, sign, axis = entry
            total = total + apply_partial(axis, sign, parts[column]).scale(coefficient)
        out.append(total)
    return QuaternionLatticePolynomial.join(out)


# Discrete vector calculus

def discrete_div(sign: int, vector: Sequence[LatticePolynomial]) -> LatticePolynomial:
    total = vector[0].like()
    for axis, part in enumerate(vector, start=1):
        total = total + apply_partial(axis, sign, part)
    return total


def discrete_grad(sign: int, scalar: LatticePolynomial) -> Vector:
    _require_three(scalar)
    return tuple(apply_partial(axis, sign, scalar) for axis in (1, 2, 3))


def discrete_curl(sign: int, vector: Sequence[LatticePolynomial]) -> Vector:
    v1, v2, v3 = vector
    return (
        apply_partial(2, sign, v3) - apply_partial(3, sign, v2),
        apply_partial(3, sign, v1) - apply_partial(1, sign, v3),
        apply_partial(1, sign, v2) - apply_partial(2, sign, v1),
    )


def vector_laplacian(vector: Sequence[LatticePolynomial]) -> Vector:
    return tuple(apply_laplacian(part) for part in vector)


def block_form(variant: MixedVariant, f: QuaternionLike) -> QuaternionLatticePolynomial:
    """``(-div Vec f, grad f^0 + curl Vec f)`` with the variant's signs."""
    variant = MixedVariant.parse(variant)
    f = as_quaternion(f)
    scalar, vector = f.scalar, f.vector
    gradient = discrete_grad(variant.outer, scalar)
    curl = discrete_curl(variant.inner, vector)
    return QuaternionLatticePolynomial.join(
        [-discrete_div(variant.outer, vector)] + [g + c for g, c in zip(gradient, curl)]
    )


@dataclass(frozen=True)
class FactorizationReport:
    source: QuaternionLatticePolynomial
    plus_minus_after_minus_plus: QuaternionLatticePolynomial
    minus_plus_after_plus_minus: QuaternionLatticePolynomial
    negative_laplacian: QuaternionLatticePolynomial

    @property
    def holds(self) -> bool:
        return (
            self.plus_minus_after_minus_plus == self.negative_laplacian
            and self.minus_plus_after_plus_minus == self.negative_laplacian
        )


def verify_laplacian_factorization(f: QuaternionLike) -> FactorizationReport:
    """``D^{+-} D^{-+} f``, ``D^{-+} D^{+-} f`` and ``-Delta f`` side by side."""
    f = as_quaternion(f)
    first = apply_mixed_dirac(MixedVariant.PLUS_MINUS, apply_mixed_dirac(MixedVariant.MINUS_PLUS, f))
    second = apply_mixed_dirac(MixedVariant.MINUS_PLUS, apply_mixed_dirac(MixedVariant.PLUS_MINUS, f))
    laplacian = QuaternionLatticePolynomial(-apply_laplacian(f.polynomial))
    return FactorizationReport(f, first, second, laplacian)


# The quaternionic variable and the mixed Fischer spaces

def multiply_by_quaternion_variable(p: LatticePolynomial) -> LatticePolynomial:
    """``(m_1h e_1 + m_2h e_2 + m_3h e_3) p`` with quaternion units on the left."""
    _require_three(p)
    return p.multiply_by_vector_variable([quaternion_unit(i) for i in (1, 2, 3)])


@dataclass(frozen=True)
class MixedDiracOperator:
    variant: MixedVariant

    @property
    def name(self) -> str:
        return f"D{self.variant.value}"

    def apply(self, p: LatticePolynomial) -> LatticePolynomial:
        return apply_mixed_dirac(self.variant, p).polynomial

    def __call__(self, p: LatticePolynomial) -> LatticePolynomial:
        return self.apply(p)


def mixed_space(h: RationalLike, variant: MixedVariant) -> FischerSpace:
    """Quaternion space of the variant's family, kernels of the mixed Dirac operator.

    Mismatched curl entries produce lower-degree terms, so kernels use the
    target ``Pi_{<=k-1}``.
    """
    variant = MixedVariant.parse(variant)
    return FischerSpace(
        3, positive_mesh(h), variant.family,
        operator=MixedDiracOperator(variant),
        lift=multiply_by_quaternion_variable,
        step=1,
        blades=QUATERNION_BLADES,
        target_kind="direct",
        name=f"mixed {variant.value}",
    )


def mixed_kernel(k: int, h: RationalLike, variant: MixedVariant) -> MonogenicBasis:
    if k < 0:
        raise RejectedInputError(f"degree must be non-negative, got {k}")
    return mixed_space(h, variant).kernel(k)


def mixed_homogeneous_closure(k: int, h: RationalLike, variant: MixedVariant) -> Optional[ClosureError]:
    """The first closure failure of ``D Pi_k`` in the homogeneous ``Pi_{k-1}``, if any."""
    space = mixed_space(h, variant)
    try:
        assemble_matrix(space.operator, space.component(k), space.component(k - 1))
    except ClosureError as exc:
        return exc
    return None


def quaternionic_fischer_decompose(
    p: QuaternionLike, variant: MixedVariant, strategy: str = "auto"
) -> FischerResult:
    """``P = sum_s (mh)^s M_{k-s}`` with ``M_j`` in the mixed Dirac kernel."""
    f = as_quaternion(p)
    return decompose_in_space(mixed_space(f.h, variant), f.polynomial, strategy)


def quaternion_harmonic_space(h: RationalLike, family: FamilySign) -> FischerSpace:
    return harmonic_space(3, h, family, QUATERNION_BLADES)


def quaternion_harmonic_decompose(p: QuaternionLike, strategy: str = "auto") -> FischerResult:
    """``P = sum |mh|^{2s} H_{k-2s}`` in the quaternion space."""
    f = as_quaternion(p)
    return decompose_in_space(quaternion_harmonic_space(f.h, f.family), f.polynomial, strategy)


@dataclass
class HarmonicSplit:
    """A harmonic polynomial written as ``M_k + (mh) M_{k-1}``."""
    harmonic: LatticePolynomial
    result: FischerResult

    @property
    def holds(self) -> bool:
        if not (self.result.feasible and self.result.annihilated and self.result.residual_contract_holds()):
            return False
        return all(c.component.is_zero() for c in self.result.components if c.power > 1)


def harmonic_as_monogenic(harmonic: LatticePolynomial, variant: MixedVariant, strategy: str = "auto") -> HarmonicSplit:
    return HarmonicSplit(harmonic, quaternionic_fischer_decompose(harmonic, variant, strategy))


# Euler and Gamma operators

# (difference sign, shift direction) for E^{-+}; E^{+-} negates both
EULER_TABLE = (
    ((-1, 1), (-1, 1), (-1, 1)),
    ((-1, 1), (1, -1), (1, -1)),
    ((1, -1), (-1, 1), (1, -1)),
    ((1, -1), (1, -1), (-1, 1)),
)

# Signs of the h-weighted second differences m_ih d^{-i} d^{+i} f^j
GAMMA_SECOND_DIFFERENCE_SIGNS = (
    (1, 1, 1),
    (1, -1, -1),
    (-1, 1, -1),
    (-1, -1, 1),
)

# Determinant terms for D^{-+} per component: header units, coordinate row
# (sign, axis), difference row (sign, difference sign, axis). D^{+-} flips the
# difference signs.
DETERMINANTS = (
    ((1, 2, 3), ((1, 1), (1, 2), (1, 3)), ((1, -1, 1), (1, -1, 2), (1, -1, 3))),
    ((0, 2, 3), ((1, 1), (1, 3), (1, 2)), ((1, -1, 1), (1, 1, 3), (1, 1, 2))),
    ((0, 1, 3), ((-1, 2), (-1, 3), (1, 1)), ((-1, -1, 2), (-1, 1, 3), (1, 1, 1))),
    ((0, 1, 2), ((1, 3), (1, 2), (1, 1)), ((1, -1, 3), (1, 1, 2), (1, 1, 1))),
)

# Fourth-determinant headers as printed in the product formulas
PRODUCT_FORMULA_HEADERS = {
    MixedVariant.MINUS_PLUS: (0, 1, 3),
    MixedVariant.PLUS_MINUS: (0, 1, 2),
}

# Both Gamma tables print the fourth header as e0 e1 e2
GAMMA_FOURTH_HEADER = (0, 1, 2)
ALTERNATE_FOURTH_HEADER = (0, 1, 3)


@dataclass(frozen=True)
class GammaTranscription:
    """A reading of the printed Gamma table, with zero or more single-entry repairs.

    ``block_sign`` flips the sign in front of the h-weighted block,
    ``fourth_header`` swaps e2 for e3 in the last determinant's header and
    ``odd_orientation`` reverses the middle header unit of the f^1 and f^3
    determinants.
    """
    block_sign: bool = False
    fourth_header: bool = False
    odd_orientation: bool = False

    @property
    def name(self) -> str:
        repairs = [
            label
            for label, on in (
                ("block-sign", self.block_sign),
                ("fourth-header", self.fourth_header),
                ("odd-orientation", self.odd_orientation),
            )
            if on
        ]
        return "+".join(repairs) or "printed"

    @property
    def header(self) -> Tuple[int, int, int]:
        return ALTERNATE_FOURTH_HEADER if self.fourth_header else GAMMA_FOURTH_HEADER

    @classmethod
    def parse(cls, value) -> "GammaTranscription":
        if isinstance(value, GammaTranscription):
            return value
        for candidate in GAMMA_TRANSCRIPTIONS:
            if candidate.name == value:
                return candidate
        names = ", ".join(t.name for t in GAMMA_TRANSCRIPTIONS)
        raise RejectedInputError(f"transcription must be one of {names}, got '{value}'")


# Every combination of repairs, fewest repairs first
GAMMA_TRANSCRIPTIONS: Tuple[GammaTranscription, ...] = tuple(
    sorted(
        (GammaTranscription(*flags) for flags in itertools.product((False, True), repeat=3)),
        key=lambda t: (t.block_sign + t.fourth_header + t.odd_orientation, not t.block_sign, not t.fourth_header),
    )
)


def _variant_flip(variant: MixedVariant) -> int:
    return 1 if variant is MixedVariant.MINUS_PLUS else -1


def euler_table(variant: MixedVariant) -> Tuple[Tuple[Tuple[int, int], ...], ...]:
    flip = _variant_flip(MixedVariant.parse(variant))
    return tuple(tuple((flip * d, flip * s) for d, s in row) for row in EULER_TABLE)


def apply_mixed_euler(variant: MixedVariant, f: QuaternionLike) -> QuaternionLatticePolynomial:
    """``(E f)^j = sum_i m_ih (d^{.,i} f^j)(mh + shift h e_i)`` from the table."""
    f = as_quaternion(f)
    out = []
    for row, part in zip(euler_table(variant), f.components()):
        total = part.like()
        for axis, (sign, direction) in enumerate(row, start=1):
            moved = shift(apply_partial(axis, sign, part), axis, direction)
            total = total + moved.multiply_by_coordinate(axis)
        out.append(total)
    return QuaternionLatticePolynomial.join(out)


def _determinant(
    part: LatticePolynomial,
    header: Tuple[int, int, int],
    coordinates: Sequence[Tuple[int, int]],
    differences: Sequence[Tuple[int, int, int]],
    flip: int,
    middle: int = 1,
) -> LatticePolynomial:
    """Cofactor expansion along the header row; ``x_a d_b`` means ``m_ah d_b part``.

    ``middle`` is the sign carried by the second header unit.
    """

    def entry(a: int, b: int) -> LatticePolynomial:
        c_sign, c_axis = coordinates[a]
        d_sign, d_op, d_axis = differences[b]
        image = apply_partial(d_axis, flip * d_op, part)
        return image.multiply_by_coordinate(c_axis).scale(c_sign * d_sign)

    minors = (
        entry(1, 2) - entry(2, 1),
        -(entry(0, 2) - entry(2, 0)).scale(middle),
        entry(0, 1) - entry(1, 0),
    )
    total = LatticePolynomial.zero(3, part.h, part.family)
    for unit, minor in zip(header, minors):
        total = total + minor.left_multiply(quaternion_unit(unit))
    return total


def _determinant_sum(
    variant: MixedVariant,
    f: QuaternionLatticePolynomial,
    fourth_header: Tuple[int, int, int],
    odd_orientation: bool = False,
) -> LatticePolynomial:
    flip = _variant_flip(variant)
    total = f.polynomial.like()
    for index, (part, (header, coords, diffs)) in enumerate(zip(f.components(), DETERMINANTS)):
        if index == 3:
            header = fourth_header
        middle = -1 if odd_orientation and index % 2 else 1
        total = total + _determinant(part, header, coords, diffs, flip, middle)
    return total


def apply_mixed_gamma(
    variant: MixedVariant, f: QuaternionLike, transcription: Union[str, GammaTranscription] = "printed"
) -> QuaternionLatticePolynomial:
    """Gamma operator read off the printed table under ``transcription``.

    The table is ``h (signs * second differences) (m_1h, m_2h, m_3h)^T``
    minus the four determinants, with ``+h`` printed for ``D^{-+}`` and
    ``-h`` for ``D^{+-}``.
    """
    variant = MixedVariant.parse(variant)
    reading = GammaTranscription.parse(transcription)
    f = as_quaternion(f)
    epsilon = _variant_flip(variant) * (-1 if reading.block_sign else 1)
    total = f.polynomial.like()
    for index, (part, signs) in enumerate(zip(f.components(), GAMMA_SECOND_DIFFERENCE_SIGNS)):
        block = part.like()
        for axis, sign in enumerate(signs, start=1):
            second = apply_partial(axis, -1, apply_partial(axis, 1, part))
            block = block + second.multiply_by_coordinate(axis).scale(sign)
        total = total + block.scale(epsilon * f.h).left_multiply(quaternion_unit(index))
    total = total - _determinant_sum(variant, f, reading.header, reading.odd_orientation)
    return QuaternionLatticePolynomial(total)


def product_formula(variant: MixedVariant, f: QuaternionLike, fourth_header: Optional[Tuple[int, int, int]] = None) -> QuaternionLatticePolynomial:
    """Right-hand side of the printed expansion of ``(mh) D f``.

    ``-(diagonal differences) (m_1h, m_2h, m_3h)^T`` plus the four
    determinant terms. ``fourth_header`` overrides the last determinant's
    header row.
    """
    variant = MixedVariant.parse(variant)
    f = as_quaternion(f)
    header = fourth_header or PRODUCT_FORMULA_HEADERS[variant]
    out = []
    for row, part in zip(euler_table(variant), f.components()):
        total = part.like()
        for axis, (sign, _) in enumerate(row, start=1):
            total = total - apply_partial(axis, sign, part).multiply_by_coordinate(axis)
        out.append(total)
    diagonal = QuaternionLatticePolynomial.join(out).polynomial
    return QuaternionLatticePolynomial(diagonal + _determinant_sum(variant, f, header))


def euler_gamma_identity_defect(
    variant: MixedVariant, f: QuaternionLike, transcription: Union[str, GammaTranscription]
) -> QuaternionLatticePolynomial:
    """``(mh) D f + E f + Gamma f``; zero when the transcription is consistent."""
    f = as_quaternion(f)
    product = multiply_by_quaternion_variable(apply_mixed_dirac(variant, f).polynomial)
    return QuaternionLatticePolynomial(
        product
        + apply_mixed_euler(variant, f).polynomial
        + apply_mixed_gamma(variant, f, transcription).polynomial
    )


def transcription_probes(h: RationalLike, variant: MixedVariant, max_degree: int = 2) -> List[QuaternionLatticePolynomial]:
    """Quaternion basis monomials of degree ``1..max_degree``."""
    variant = MixedVariant.parse(variant)
    probes = []
    for degree in range(1, max_degree + 1):
        basis = GradedComponentBasis(3, positive_mesh(h), variant.family, degree, QUATERNION_BLADES)
        probes.extend(QuaternionLatticePolynomial(basis.element(i)) for i in range(basis.size))
    return probes


@dataclass(frozen=True)
class TranscriptionVerdict:
    transcription: str
    consistent: bool
    witness: Optional[str] = None
    defect: Optional[str] = None


@dataclass(frozen=True)
class TranscriptionResolution:
    variant: MixedVariant
    chosen: Optional[str]
    verdicts: Tuple[TranscriptionVerdict, ...] = field(default_factory=tuple)

    @property
    def resolved(self) -> bool:
        return self.chosen is not None


@lru_cache(maxsize=16)
def resolve_gamma_transcription(variant: MixedVariant, h: RationalLike = 1) -> TranscriptionResolution:
    """First table reading for which ``(mh) D + E + Gamma`` vanishes on the probes.

    ``chosen`` is ``None`` when no reading survives.
    """
    variant = MixedVariant.parse(variant)
    probes = transcription_probes(h, variant)
    verdicts = []
    for transcription in GAMMA_TRANSCRIPTIONS:
        verdict = TranscriptionVerdict(transcription.name, True)
        for probe in probes:
            defect = euler_gamma_identity_defect(variant, probe, transcription)
            if not defect.is_zero():
                verdict = TranscriptionVerdict(transcription.name, False, str(probe), str(defect))
                break
        verdicts.append(verdict)
    chosen = next((v.transcription for v in verdicts if v.consistent), None)
    log_structured(logger, "info" if chosen else "warning", "gamma transcription", {
        "variant": variant.value,
        "chosen": chosen,
        "rejected": [v.transcription for v in verdicts if not v.consistent],
    })
    return TranscriptionResolution(variant, chosen, tuple(verdicts))


def quaternionic_euler_gamma(
    variant: MixedVariant, f: QuaternionLike
) -> Tuple[QuaternionLatticePolynomial, QuaternionLatticePolynomial]:
    """``(E f, Gamma f)`` with Gamma under the consistent table reading.

    Raises ``InfeasibleError`` when no reading of the table is consistent.
    """
    variant = MixedVariant.parse(variant)
    f = as_quaternion(f)
    resolution = resolve_gamma_transcription(variant, f.h)
    if not resolution.resolved:
        raise InfeasibleError(f"no reading of the Gamma^{variant.value} table satisfies (mh) D + E + Gamma = 0")
    return apply_mixed_euler(variant, f), apply_mixed_gamma(variant, f, resolution.chosen)


def random_quaternion(
    rng: random.Random, h: RationalLike, family: FamilySign, degree: int
) -> QuaternionLatticePolynomial:
    return QuaternionLatticePolynomial(
        random_homogeneous(rng, 3, positive_mesh(h), family, degree, QUATERNION_BLADES)
    )


def kernel_dimensions(h: RationalLike, variant: MixedVariant, max_degree: int) -> Dict[int, int]:
    return {k: mixed_kernel(k, h, variant).dimension for k in range(max_degree + 1)}
