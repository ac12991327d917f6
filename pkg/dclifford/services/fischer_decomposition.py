"""Fischer inner product, kernel bases and Fischer decompositions.

A ``FischerSpace`` bundles everything a decomposition needs: the polynomial
context, the blades spanned, the annihilating operator, the lifting map and
its degree step. The Clifford/Dirac case, the Laplacian case and the
quaternionic mixed-Dirac case are all instances of it.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from dclifford.core.exceptions import ClosureError, RejectedInputError
from dclifford.core.logging import get_logger, log_structured
from dclifford.services import linalg
from dclifford.services.difference_operators import (
    Basis,
    DifferenceOperator,
    Operator,
    OperatorMatrix,
    assemble_matrix,
)
from dclifford.services.exact_algebra import (
    RationalLike,
    all_blades,
    index_factorial,
    positive_mesh,
)
from dclifford.services.factorial_basis import squared_norm_polynomial
from dclifford.services.factorial_powers import FamilySign
from dclifford.services.lattice_polynomial import (
    DirectSumBasis,
    GradedComponentBasis,
    LatticePolynomial,
    evaluate,
)
from dclifford.services.sampling import random_homogeneous

logger = get_logger(__name__)

STRATEGIES = ("exact", "graded", "auto")


# Inner products

def fischer_inner_product(p: LatticePolynomial, q: LatticePolynomial) -> Fraction:
    """``sum_alpha alpha! Sc(conj(a_alpha) b_alpha)`` over matching multi-indices."""
    p._check(q)
    total = Fraction(0)
    for alpha, a in p.items():
        b = q.terms.get(alpha)
        if b is not None:
            total += index_factorial(alpha) * (a.conjugate() * b).scalar_part()
    return total


def operator_form_inner_product(p: LatticePolynomial, q: LatticePolynomial) -> Fraction:
    """``Sc(conj(P)(d) Q)(0)``: each ``(mh)^{(alpha)}`` of ``P`` becomes ``d^alpha``."""
    p._check(q)
    origin = [0] * p.n
    total = Fraction(0)
    for alpha, a in p.items():
        image = q
        for axis, power in enumerate(alpha, start=1):
            for _ in range(power):
                image = image.matched_difference(axis)
        total += (a.conjugate() * evaluate(image, origin)).scalar_part()
    return total


@dataclass(frozen=True)
class FischerPairing:
    """The Fischer inner product for one ``(n, h, family)`` context.

    Mixed-degree polynomials pair matching multi-indices across all degrees.
    """
    n: int
    h: Fraction
    family: FamilySign

    def _context(self, p: LatticePolynomial) -> None:
        if p.context != (self.n, self.h, self.family):
            raise RejectedInputError("polynomial context does not match the pairing")

    def __call__(self, p: LatticePolynomial, q: LatticePolynomial) -> Fraction:
        self._context(p)
        return fischer_inner_product(p, q)

    def gram(self, left: Sequence[LatticePolynomial], right: Sequence[LatticePolynomial]) -> List[List[Fraction]]:
        return [[self(a, b) for b in right] for a in left]

    def norm_squared(self, p: LatticePolynomial) -> Fraction:
        return self(p, p)


# Spaces and kernels

def multiply_by_polynomial(factor: LatticePolynomial) -> Callable[[LatticePolynomial], LatticePolynomial]:
    return lambda p: factor.multiply(p)


@dataclass(frozen=True)
class MonogenicBasis:
    """Canonical basis of ``Pi_k`` intersected with the kernel of an operator.

    ``matrix`` is the exact operator matrix the basis was computed from.
    """
    degree: int
    elements: Tuple[LatticePolynomial, ...]
    matrix: OperatorMatrix

    @property
    def dimension(self) -> int:
        return len(self.elements)

    @property
    def operator(self) -> str:
        return self.matrix.operator

    def verify(self, operator: Operator) -> bool:
        return all(operator.apply(m).is_zero() for m in self.elements)


@dataclass(frozen=True)
class FischerSpace:
    """Graded space with an annihilating operator and a lifting map.

    ``target(j)`` is the span the operator maps ``Pi_j`` into. Lifting raises
    the top degree by ``step`` and may add lower-degree terms.
    """
    n: int
    h: Fraction
    family: FamilySign
    operator: Operator
    lift: Callable[[LatticePolynomial], LatticePolynomial] = field(compare=False)
    step: int = 1
    blades: Tuple[int, ...] = ()
    target_kind: str = "graded"
    name: str = "monogenic"

    def __post_init__(self):
        object.__setattr__(self, "h", positive_mesh(self.h))
        object.__setattr__(self, "family", FamilySign.parse(self.family))
        if not self.blades:
            object.__setattr__(self, "blades", all_blades(self.n))

    @property
    def pairing(self) -> FischerPairing:
        return FischerPairing(self.n, self.h, self.family)

    def component(self, degree: int) -> GradedComponentBasis:
        return GradedComponentBasis(self.n, self.h, self.family, degree, self.blades)

    def up_to(self, degree: int) -> DirectSumBasis:
        return DirectSumBasis.up_to(self.n, self.h, self.family, degree, self.blades)

    def target(self, degree: int) -> Basis:
        image_degree = degree - self.step
        if self.target_kind == "graded":
            return self.component(image_degree)
        return self.up_to(image_degree)

    def kernel(self, degree: int) -> MonogenicBasis:
        return _kernel(self, degree)

    def lifted(self, p: LatticePolynomial, times: int) -> LatticePolynomial:
        for _ in range(times):
            p = self.lift(p)
        return p

    def top_lift(self, p: LatticePolynomial) -> LatticePolynomial:
        """Degree ``deg p + step`` part of the lift."""
        return self.lift(p).graded_component(p.degree + self.step)

    def contains(self, p: LatticePolynomial) -> bool:
        return p.context == (self.n, self.h, self.family) and set(p.blades()) <= set(self.blades)


@lru_cache(maxsize=256)
def _kernel(space: FischerSpace, degree: int) -> MonogenicBasis:
    matrix = assemble_matrix(space.operator, space.component(degree), space.target(degree))
    elements = tuple(matrix.kernel_polynomials())
    logger.debug(
        f"{space.name} kernel: degree {degree}, n={space.n}, "
        f"{matrix.shape[0]}x{matrix.shape[1]} matrix, dimension {len(elements)}"
    )
    return MonogenicBasis(degree, elements, matrix)


def _matched_sign(family: FamilySign, sign: Optional[int]) -> int:
    expected = family.operator_sign
    if sign is None:
        return expected
    if sign != expected:
        raise RejectedInputError(
            f"operator sign {'+' if sign > 0 else '-'} is not matched to family {family.value}"
        )
    return sign


def monogenic_space(n: int, h: RationalLike, family: FamilySign, sign: Optional[int] = None) -> FischerSpace:
    """Clifford space with ``D_h`` and lifting by the vector variable ``(mh)``."""
    family = FamilySign.parse(family)
    sign = _matched_sign(family, sign)
    return FischerSpace(
        n, positive_mesh(h), family,
        operator=DifferenceOperator("dirac", sign),
        lift=lambda p: p.multiply_by_vector_variable(),
        step=1,
        target_kind="graded",
        name="monogenic",
    )


def harmonic_space(n: int, h: RationalLike, family: FamilySign, blades: Tuple[int, ...] = ()) -> FischerSpace:
    """Space with the Laplacian and lifting by the scalar ``|mh|^2``.

    The Laplacian leaves the graded component, so kernels use the target
    ``Pi_{<=k-2}``.
    """
    family = FamilySign.parse(family)
    mesh = positive_mesh(h)
    norm = squared_norm_polynomial(n, mesh, family)
    return FischerSpace(
        n, mesh, family,
        operator=DifferenceOperator("laplacian"),
        lift=multiply_by_polynomial(norm),
        step=2,
        blades=blades,
        target_kind="direct",
        name="harmonic",
    )


def monogenic_kernel(
    k: int, n: int, h: RationalLike, family: FamilySign, sign: Optional[int] = None
) -> MonogenicBasis:
    """Basis of ``Pi_k`` intersected with the kernel of the matched ``D_h``."""
    if k < 0:
        raise RejectedInputError(f"degree must be non-negative, got {k}")
    return monogenic_space(n, h, family, sign).kernel(k)


def harmonic_kernel(
    k: int, n: int, h: RationalLike, family: FamilySign, blades: Tuple[int, ...] = ()
) -> MonogenicBasis:
    if k < 0:
        raise RejectedInputError(f"degree must be non-negative, got {k}")
    return harmonic_space(n, h, family, blades).kernel(k)


# Decomposition results

@dataclass(frozen=True)
class FischerComponent:
    """``(lift)^s`` applied to ``component`` of degree ``degree``."""
    power: int
    degree: int
    component: LatticePolynomial


@dataclass
class FischerResult:
    strategy: str
    feasible: bool
    degree: int
    source: LatticePolynomial
    components: List[FischerComponent] = field(default_factory=list)
    residual: Optional[LatticePolynomial] = None
    kernel_dimensions: Dict[int, int] = field(default_factory=dict)
    annihilated: bool = False
    exact_feasible: Optional[bool] = None
    diagnostics: List[str] = field(default_factory=list)

    def component(self, degree: int) -> Optional[LatticePolynomial]:
        for piece in self.components:
            if piece.degree == degree:
                return piece.component
        return None

    def residual_contract_holds(self) -> bool:
        """Exact: zero residual. Graded: zero residual in the top grade."""
        if not self.feasible or self.residual is None:
            return False
        if self.strategy == "exact":
            return self.residual.is_zero()
        return self.residual.graded_component(self.degree).is_zero()


def _check_source(space: FischerSpace, p: LatticePolynomial) -> int:
    if p.context != (space.n, space.h, space.family):
        raise RejectedInputError(
            f"polynomial context (n={p.n}, family {p.family.value}) does not match the "
            f"{space.name} space (n={space.n}, family {space.family.value})"
        )
    if not p.is_homogeneous():
        raise RejectedInputError(f"decomposition needs a homogeneous polynomial, got degrees {p.degrees()}")
    if not space.contains(p):
        raise RejectedInputError(f"polynomial has blades outside the {space.name} space")
    return max(p.degree, 0)


def _levels(space: FischerSpace, k: int) -> List[Tuple[int, int]]:
    """``(s, k - step s)`` for every admissible power ``s``."""
    return [(s, k - space.step * s) for s in range(k // space.step + 1)]


def _reconstruct(space: FischerSpace, components: Sequence[FischerComponent], like: LatticePolynomial) -> LatticePolynomial:
    total = like.like()
    for piece in components:
        total = total + space.lifted(piece.component, piece.power)
    return total


def _finish(space: FischerSpace, result: FischerResult) -> FischerResult:
    result.annihilated = all(space.operator.apply(c.component).is_zero() for c in result.components)
    result.residual = result.source - _reconstruct(space, result.components, result.source)
    log_structured(logger, "info", f"{space.name} decomposition", {
        "strategy": result.strategy,
        "degree": result.degree,
        "feasible": result.feasible,
        "residual_zero": result.residual.is_zero(),
    })
    return result


def _exact(space: FischerSpace, p: LatticePolynomial, k: int) -> FischerResult:
    """Solve ``P = sum_s lift^s M_{k - step s}`` as a literal polynomial identity."""
    result = FischerResult("exact", False, k, p)
    columns: List[LatticePolynomial] = []
    owners: List[Tuple[int, int, int]] = []
    for s, j in _levels(space, k):
        basis = space.kernel(j)
        result.kernel_dimensions[j] = basis.dimension
        for t, m in enumerate(basis.elements):
            columns.append(space.lifted(m, s))
            owners.append((s, j, t))
    target = space.up_to(k)
    for column in columns:
        stray = target.stray_terms(column)
        if stray:
            result.diagnostics.append(f"lifted kernel element leaves Pi_<={k}: {', '.join(stray)}")
            return _finish(space, result)
    vectors = [target.coordinates(c) for c in columns]
    rows = linalg.transpose(vectors, target.size) if vectors else [[] for _ in range(target.size)]
    solution = linalg.solve(rows, len(columns), target.coordinates(p))
    if solution is None:
        result.diagnostics.append(
            f"the literal identity has no solution over Pi_<={k} ({len(columns)} unknowns)"
        )
        return _finish(space, result)
    result.feasible = True
    for s, j in _levels(space, k):
        piece = p.like()
        for (owner_s, _, t), value in zip(owners, solution):
            if owner_s == s and value:
                piece = piece + space.kernel(j).elements[t].scale(value)
        result.components.append(FischerComponent(s, j, piece))
    return _finish(space, result)


def _project(space: FischerSpace, basis: MonogenicBasis, q: LatticePolynomial) -> Optional[LatticePolynomial]:
    if not basis.elements:
        return q.like()
    pairing = space.pairing
    gram = pairing.gram(basis.elements, basis.elements)
    rhs = [pairing(m, q) for m in basis.elements]
    coefficients = linalg.solve(gram, len(basis.elements), rhs)
    if coefficients is None:
        return None
    projection = q.like()
    for m, c in zip(basis.elements, coefficients):
        projection = projection + m.scale(c)
    return projection


def _graded(space: FischerSpace, p: LatticePolynomial, k: int) -> FischerResult:
    """Peel degrees from the top with Fischer-orthogonal projections."""
    result = FischerResult("graded", False, k, p)
    current = p
    for s, j in _levels(space, k):
        basis = space.kernel(j)
        result.kernel_dimensions[j] = basis.dimension
        projection = _project(space, basis, current)
        if projection is None:
            result.diagnostics.append(f"singular Gram matrix for the degree {j} kernel")
            return _finish(space, result)
        result.components.append(FischerComponent(s, j, projection))
        remainder = current - projection
        lower = j - space.step
        if lower < 0:
            if not remainder.is_zero():
                result.diagnostics.append(f"degree {j} remainder is not in the kernel")
                return _finish(space, result)
            break
        source = space.component(lower)
        target = space.component(j)
        images = []
        for index in range(source.size):
            image = space.top_lift(source.element(index))
            images.append(target.coordinates(image))
        rows = linalg.transpose(images, target.size) if images else [[] for _ in range(target.size)]
        cofactor = linalg.solve(rows, source.size, target.coordinates(remainder))
        if cofactor is None:
            result.diagnostics.append(f"degree {j} remainder is not a top-grade lift")
            return _finish(space, result)
        current = source.from_coordinates(cofactor)
    result.feasible = True
    return _finish(space, result)


def decompose_in_space(space: FischerSpace, p: LatticePolynomial, strategy: str = "auto") -> FischerResult:
    """Fischer decomposition of a homogeneous ``p`` in ``space``.

    ``auto`` tries the literal identity first and falls back to the graded
    reading. Infeasibility is reported in the result.
    """
    if strategy not in STRATEGIES:
        raise RejectedInputError(f"strategy must be one of {', '.join(STRATEGIES)}, got '{strategy}'")
    k = _check_source(space, p)
    if strategy == "graded":
        return _graded(space, p, k)
    try:
        exact = _exact(space, p, k)
    except ClosureError as exc:
        if strategy == "exact":
            raise
        exact = FischerResult("exact", False, k, p, diagnostics=[exc.detail])
    exact.exact_feasible = exact.feasible
    if strategy == "exact" or exact.feasible:
        return exact
    logger.info(f"{space.name} decomposition of degree {k}: literal identity infeasible, using graded")
    graded = _graded(space, p, k)
    graded.exact_feasible = False
    graded.diagnostics = exact.diagnostics + graded.diagnostics
    return graded


def fischer_decompose(p: LatticePolynomial, strategy: str = "auto") -> FischerResult:
    """Decomposition ``P = sum_s (mh)^s M_{k-s}`` for the matched Dirac operator."""
    return decompose_in_space(monogenic_space(p.n, p.h, p.family), p, strategy)


def harmonic_fischer_decompose(
    p: LatticePolynomial, strategy: str = "auto", blades: Tuple[int, ...] = ()
) -> FischerResult:
    """Decomposition ``P = sum_s |mh|^{2s} H_{k-2s}`` with harmonic components."""
    return decompose_in_space(harmonic_space(p.n, p.h, p.family, blades), p, strategy)


# Certificates

@dataclass
class OrthogonalityCertificate:
    degree: int
    kernel_dimension: int
    complement_dimension: int
    literal_block: List[List[Fraction]]
    top_block: List[List[Fraction]]
    adjoint_trials: int = 0
    adjoint_failures: List[Tuple[str, str]] = field(default_factory=list)

    @staticmethod
    def _zero(block: List[List[Fraction]]) -> bool:
        return all(v == 0 for row in block for v in row)

    @property
    def literal_orthogonal(self) -> bool:
        return self._zero(self.literal_block)

    @property
    def top_orthogonal(self) -> bool:
        return self._zero(self.top_block)

    @property
    def adjoint_holds(self) -> bool:
        return not self.adjoint_failures


def adjoint_sides(space: FischerSpace, p: LatticePolynomial, q: LatticePolynomial) -> Tuple[Fraction, Fraction]:
    """``[lift P, Q]`` and ``-[P, op Q]``; equal for the Dirac case."""
    pairing = space.pairing
    return pairing(space.lift(p), q), -pairing(p, space.operator.apply(q))


def orthogonality_certificate(
    k: int,
    n: int,
    h: RationalLike,
    family: FamilySign,
    trials: int = 0,
    rng: Optional[random.Random] = None,
    space: Optional[FischerSpace] = None,
) -> OrthogonalityCertificate:
    """Gram blocks between the degree ``k`` kernel and the lifted ``Pi_{k-step}``."""
    space = space or monogenic_space(n, h, family)
    kernel = space.kernel(k)
    lower = k - space.step
    complement = space.component(lower)
    lifted = [space.lift(complement.element(i)) for i in range(complement.size)]
    tops = [image.graded_component(k) for image in lifted]
    pairing = space.pairing
    certificate = OrthogonalityCertificate(
        degree=k,
        kernel_dimension=kernel.dimension,
        complement_dimension=complement.size,
        literal_block=pairing.gram(kernel.elements, lifted),
        top_block=pairing.gram(kernel.elements, tops),
    )
    if trials and lower >= 0:
        rng = rng or random.Random(0)
        for _ in range(trials):
            p = random_homogeneous(rng, space.n, space.h, space.family, lower, space.blades)
            q = random_homogeneous(rng, space.n, space.h, space.family, k, space.blades)
            lhs, rhs = adjoint_sides(space, p, q)
            certificate.adjoint_trials += 1
            if lhs != rhs:
                certificate.adjoint_failures.append((str(p), str(q)))
    return certificate


@dataclass(frozen=True)
class DimensionAccount:
    degree: int
    source_dimension: int
    expected_dimension: int
    kernel_dimension: int
    rank: int

    @property
    def holds(self) -> bool:
        return (
            self.kernel_dimension + self.rank == self.source_dimension == self.expected_dimension
        )


def dimension_accounting(
    k: int,
    n: int,
    h: RationalLike,
    family: FamilySign,
    space: Optional[FischerSpace] = None,
) -> DimensionAccount:
    """``dim ker + rank = dim Pi_k = C(k+n-1, n-1) * #blades``."""
    space = space or monogenic_space(n, h, family)
    basis = space.kernel(k)
    source = space.component(k)
    expected = math.comb(k + space.n - 1, space.n - 1) * len(space.blades)
    return DimensionAccount(k, source.size, expected, basis.dimension, basis.matrix.rank())
