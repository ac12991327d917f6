"""The catalogue of checkable identities.

Claims are grouped by subject. Every check returns ``(lhs, rhs)``; the runner
compares them exactly. Pointwise checks return the first disagreeing lattice
point, or ``("agree", "agree")``.
"""
from __future__ import annotations

import itertools
import math
import random
from fractions import Fraction
from typing import Callable, Iterable, Iterator, Optional, Sequence, Tuple

from dclifford.core.config import settings
from dclifford.services import stencils
from dclifford.services.claim_registry import (
    ClaimRecord,
    Expectation,
    GridCell,
    Inputs,
    Sampler,
    render,
)
from dclifford.services.difference_operators import (
    FunctionOperator,
    apply_A,
    apply_B,
    apply_C,
    apply_dirac,
    apply_euler,
    apply_gamma,
    apply_L,
    apply_laplacian,
    apply_partial,
    apply_R,
    apply_V,
    assemble_matrix,
    invert_R,
    summation_polynomial,
)
from dclifford.services.exact_algebra import (
    CliffordElement,
    format_rational,
    hamilton_left_matrix,
    index_factorial,
    multi_indices,
    printed_variable_matrix,
)
from dclifford.services.factorial_basis import (
    homogeneous_power,
    limit_check,
    shift,
    squared_norm_polynomial,
)
from dclifford.services.factorial_powers import (
    factorial_power_eval,
    factorial_to_monomial,
    factorial_to_monomial_1d,
    monomial_to_factorial,
    monomial_to_factorial_1d,
    nested_sum_coefficient,
    printed_factorial_to_monomial_1d,
    printed_monomial_to_factorial_1d,
)
from dclifford.services.fischer_decomposition import (
    FischerResult,
    FischerSpace,
    adjoint_sides,
    dimension_accounting,
    fischer_decompose,
    fischer_inner_product,
    harmonic_fischer_decompose,
    harmonic_kernel,
    monogenic_space,
    operator_form_inner_product,
    orthogonality_certificate,
)
from dclifford.services.lattice_polynomial import GradedComponentBasis, LatticePolynomial
from dclifford.services.quaternion_dirac import (
    MixedVariant,
    QuaternionLatticePolynomial,
    apply_mixed_dirac,
    apply_mixed_euler,
    block_form,
    discrete_curl,
    discrete_div,
    discrete_grad,
    euler_gamma_identity_defect,
    harmonic_as_monogenic,
    mixed_homogeneous_closure,
    mixed_space,
    multiply_by_quaternion_variable,
    product_formula,
    quaternion_harmonic_space,
    quaternionic_euler_gamma,
    quaternionic_fischer_decompose,
    random_quaternion,
    resolve_gamma_transcription,
    vector_laplacian,
    verify_laplacian_factorization,
)
from dclifford.services.sampling import random_homogeneous, random_polynomial, random_rational

EXACT = Expectation.EXACT
HYPOTHESIS = Expectation.HYPOTHESIS
NEGATIVE = Expectation.NEGATIVE

AGREE = ("agree", "agree")


# Samplers

def homogeneous(*shape: Tuple[str, int], basis_limit: Optional[int] = None, blades=None) -> Sampler:
    """Inputs named by ``shape`` with degrees ``k + offset``.

    The first input runs through the scalar basis monomials before the
    random trials; the others are always random.
    """
    shape = shape or (("f", 0),)

    def sample(cell: GridCell, rng: random.Random, trials: int) -> Iterator[Inputs]:
        degrees = {name: cell.k + offset for name, offset in shape}
        if any(d < 0 for d in degrees.values()):
            return
        first, _ = shape[0]

        def rest() -> Inputs:
            return {
                name: random_homogeneous(rng, cell.n, cell.h, cell.family, degrees[name], blades)
                for name, _ in shape[1:]
            }

        for alpha in multi_indices(cell.n, degrees[first])[:basis_limit]:
            yield {first: LatticePolynomial.monomial(cell.n, cell.h, cell.family, alpha), **rest()}
        for _ in range(trials):
            yield {
                first: random_homogeneous(rng, cell.n, cell.h, cell.family, degrees[first], blades),
                **rest(),
            }

    return sample


def monomials(cell: GridCell, rng: random.Random, trials: int) -> Iterator[Inputs]:
    """Every scalar basis monomial of degree ``k``, no random inputs."""
    for alpha in multi_indices(cell.n, cell.k):
        yield {"f": LatticePolynomial.monomial(cell.n, cell.h, cell.family, alpha)}


def with_random_factor(cell: GridCell, rng: random.Random, trials: int) -> Iterator[Inputs]:
    """Homogeneous ``f`` paired with a random mixed-degree ``g``."""
    for inputs in homogeneous(("f", 0))(cell, rng, trials):
        yield {**inputs, "g": random_polynomial(rng, cell.n, cell.h, cell.family, 2)}


def kernel_elements(space_of: Callable[[GridCell], FischerSpace], basis_limit: int = 4) -> Sampler:
    """Kernel basis elements of degree ``k``, then random combinations."""

    def sample(cell: GridCell, rng: random.Random, trials: int) -> Iterator[Inputs]:
        elements = space_of(cell).kernel(cell.k).elements
        if not elements:
            return
        for m in elements[:basis_limit]:
            yield {"m": m}
        for _ in range(trials):
            chosen = rng.sample(list(elements), min(3, len(elements)))
            total = chosen[0].like()
            for m in chosen:
                total = total + m.scale(random_rational(rng))
            if not total.is_zero():
                yield {"m": total}

    return sample


def quaternions(basis_limit: Optional[int] = None) -> Sampler:
    def sample(cell: GridCell, rng: random.Random, trials: int) -> Iterator[Inputs]:
        for alpha in multi_indices(3, cell.k)[:basis_limit]:
            yield {"f": LatticePolynomial.monomial(3, cell.h, cell.family, alpha)}
        for _ in range(trials):
            yield {"f": random_quaternion(rng, cell.h, cell.family, cell.k).polynomial}

    return sample


# Helpers for checks

def _verdict(ok: bool, observed: str, wanted: str) -> Tuple[str, str]:
    return observed, observed if ok else wanted


def _point(point: Sequence[Fraction]) -> str:
    return "(" + ", ".join(format_rational(x) for x in point) + ")"


def _pointwise(
    cell: GridCell, left, right, label: str = "", radius: Optional[int] = None
) -> Optional[Tuple[str, str]]:
    """First lattice point where two value functions differ."""
    prefix = f"{label} " if label else ""
    for point in stencils.lattice_points(cell.n, cell.h, radius):
        a, b = left(point), right(point)
        if a != b:
            where = _point(point)
            return f"{prefix}at {where}: {render(a)}", f"{prefix}at {where}: {render(b)}"
    return None


def _against_stencils(pairs: Iterable[Tuple[str, LatticePolynomial, stencils.LatticeFunction]]) -> Tuple[str, str]:
    """Compare polynomials with stencil values; lhs is the stencil side."""
    for label, expected, reference in pairs:
        found = stencils.first_disagreement(expected, reference)
        if found is not None:
            point, value, stencil_value = found
            where = _point(point)
            return f"{label} at {where}: {render(stencil_value)}", f"{label} at {where}: {render(value)}"
    return AGREE


def _half_n(cell: GridCell) -> Fraction:
    return Fraction(cell.n, 2)


def _mh(p: LatticePolynomial) -> LatticePolynomial:
    return p.multiply_by_vector_variable()


def _mh_power(p: LatticePolynomial, s: int) -> LatticePolynomial:
    for _ in range(s):
        p = _mh(p)
    return p


def _dirac_power(sign: int, p: LatticePolynomial, s: int) -> LatticePolynomial:
    for _ in range(s):
        p = apply_dirac(sign, p)
    return p


def _one_pm(cell: GridCell, p: LatticePolynomial) -> LatticePolynomial:
    return p.left_multiply(CliffordElement.one_pm(cell.n, cell.sign))


def _only(f: LatticePolynomial) -> Tuple[int, ...]:
    (alpha,) = f.terms.keys()
    return alpha


def _result_text(result: FischerResult) -> str:
    if result.feasible:
        return (
            f"feasible, annihilated={render(result.annihilated)}, "
            f"residual {render(result.residual)}"
        )
    return "infeasible: " + "; ".join(result.diagnostics)


def _decomposition_holds(result: FischerResult) -> bool:
    return result.feasible and result.annihilated and result.residual_contract_holds()


def _variant(cell: GridCell) -> MixedVariant:
    """``D^{-+}`` for backward cells, ``D^{+-}`` for forward cells."""
    return MixedVariant.MINUS_PLUS if cell.sign < 0 else MixedVariant.PLUS_MINUS


def _quaternion_cells(**overrides) -> dict:
    return {"dimensions": (3,), **overrides}


def _vector(parts: Sequence[LatticePolynomial]) -> LatticePolynomial:
    return QuaternionLatticePolynomial.join([parts[0].like()] + list(parts)).polynomial


# Factorial powers and Stirling conversions

# The product rules hold pointwise for any functions
PRODUCT_RULE_RADIUS = 1


def check_product_rule_shifted_right(cell: GridCell, inputs: Inputs):
    f = stencils.LatticeFunction.from_polynomial(inputs["f"])
    g = stencils.LatticeFunction.from_polynomial(inputs["g"])
    fg = f.derive("fg", lambda x: f(x) * g(x))
    s = cell.sign
    for axis in range(1, cell.n + 1):
        lhs = stencils.partial(fg, axis, s)
        df, dg = stencils.partial(f, axis, s), stencils.partial(g, axis, s)
        found = _pointwise(
            cell, lhs, lambda x: f(x) * dg(x) + df(x) * g(f.moved(x, axis, s)), f"axis {axis}",
            radius=PRODUCT_RULE_RADIUS,
        )
        if found:
            return found
    return AGREE


def check_product_rule_shifted_left(cell: GridCell, inputs: Inputs):
    f = stencils.LatticeFunction.from_polynomial(inputs["f"])
    g = stencils.LatticeFunction.from_polynomial(inputs["g"])
    fg = f.derive("fg", lambda x: f(x) * g(x))
    s = cell.sign
    for axis in range(1, cell.n + 1):
        lhs = stencils.partial(fg, axis, s)
        df, dg = stencils.partial(f, axis, s), stencils.partial(g, axis, s)
        found = _pointwise(
            cell, lhs, lambda x: f(f.moved(x, axis, s)) * dg(x) + df(x) * g(x), f"axis {axis}",
            radius=PRODUCT_RULE_RADIUS,
        )
        if found:
            return found
    return AGREE


def check_recurrence(cell: GridCell, inputs: Inputs):
    s, fam, h = cell.k, cell.family, cell.h
    for m in range(-5, 6):
        x = m * h
        lhs = factorial_power_eval(s + 1, fam, h, x)
        rhs = (x + fam.offset * s * h) * factorial_power_eval(s, fam, h, x)
        if lhs != rhs:
            return f"x={format_rational(x)}: {format_rational(lhs)}", f"x={format_rational(x)}: {format_rational(rhs)}"
    return AGREE


def check_matched_difference(cell: GridCell, inputs: Inputs):
    f = inputs["f"]
    alpha = _only(f)
    reference = stencils.LatticeFunction.from_polynomial(f)
    pairs = []
    for axis in range(1, cell.n + 1):
        i = axis - 1
        if alpha[i]:
            lowered = tuple(a - 1 if j == i else a for j, a in enumerate(alpha))
            expected = f.like({lowered: CliffordElement.scalar(cell.n, alpha[i])})
        else:
            expected = f.like()
        pairs.append((f"axis {axis}", expected, stencils.partial(reference, axis, cell.sign)))
    return _against_stencils(pairs)


def check_mismatched_difference(cell: GridCell, inputs: Inputs):
    f = inputs["f"]
    alpha = _only(f)
    reference = stencils.LatticeFunction.from_polynomial(f)
    pairs = []
    for axis in range(1, cell.n + 1):
        i = axis - 1
        if alpha[i]:
            lowered = tuple(a - 1 if j == i else a for j, a in enumerate(alpha))
            expected = shift(f.like({lowered: CliffordElement.scalar(cell.n)}), axis, cell.family.offset)
            expected = expected.scale(alpha[i])
        else:
            expected = f.like()
        pairs.append((f"axis {axis}", expected, stencils.partial(reference, axis, -cell.sign)))
    return _against_stencils(pairs)


def _limit_verdict(alpha: Sequence[int], cell: GridCell):
    check = limit_check(alpha, cell.family)
    low, high = settings.limit_ratio_bounds()
    observed = f"ratios {render(check.window(settings.limit_window_start))}"
    ok = check.contracts_within(low, high, settings.limit_window_start)
    return _verdict(ok, observed, f"ratios within [{format_rational(low)}, {format_rational(high)}]")


def check_limit_one_dimensional(cell: GridCell, inputs: Inputs):
    return _limit_verdict((cell.k,), cell)


def check_limit_multi_index(cell: GridCell, inputs: Inputs):
    return _limit_verdict(_only(inputs["f"]), cell)


def check_euler_eigenvalue(cell: GridCell, inputs: Inputs):
    f = inputs["f"]
    reference = stencils.euler(stencils.LatticeFunction.from_polynomial(f), cell.sign)
    return _against_stencils([("E", f.scale(cell.k), reference)])


def check_difference_duality(cell: GridCell, inputs: Inputs):
    f = inputs["f"]
    alpha = _only(f)
    base = stencils.LatticeFunction.from_polynomial(f)
    origin = (Fraction(0),) * cell.n
    diagonal = (cell.h,) * cell.n
    for beta in multi_indices(cell.n, cell.k):
        g = base
        for axis, power in enumerate(beta, start=1):
            for _ in range(power):
                g = stencils.partial(g, axis, cell.sign)
        expected = CliffordElement.scalar(cell.n, index_factorial(alpha) if beta == alpha else 0)
        for point in (origin, diagonal):
            value = g(point)
            if value != expected:
                label = f"d^{list(beta)} at {_point(point)}"
                return f"{label}: {render(value)}", f"{label}: {render(expected)}"
    return AGREE


def _stirling_pointwise(cell: GridCell, to_monomial: dict, to_factorial: dict):
    s, fam, h = cell.k, cell.family, cell.h
    for m in range(-5, 6):
        x = m * h
        factorial = factorial_power_eval(s, fam, h, x)
        expansion = sum((c * x ** j for j, c in to_monomial.items()), Fraction(0))
        if factorial != expansion:
            return f"(x)^({s}) at x={format_rational(x)}: {format_rational(factorial)}", \
                f"Stirling sum: {format_rational(expansion)}"
        power = x ** s
        back = sum(
            (c * factorial_power_eval(j, fam, h, x) for j, c in to_factorial.items()), Fraction(0)
        )
        if power != back:
            return f"x^{s} at x={format_rational(x)}: {format_rational(power)}", \
                f"Stirling sum: {format_rational(back)}"
    return AGREE


def check_printed_stirling(cell: GridCell, inputs: Inputs):
    return _stirling_pointwise(
        cell,
        printed_factorial_to_monomial_1d(cell.k, cell.family),
        printed_monomial_to_factorial_1d(cell.k, cell.family),
    )


def check_scaled_stirling(cell: GridCell, inputs: Inputs):
    return _stirling_pointwise(
        cell,
        factorial_to_monomial_1d(cell.k, cell.family, cell.h),
        monomial_to_factorial_1d(cell.k, cell.family, cell.h),
    )


def check_multi_index_stirling(cell: GridCell, inputs: Inputs):
    alpha = _only(inputs["f"])
    fam, h = cell.family, cell.h
    forward = factorial_to_monomial(alpha, fam, h)
    backward = monomial_to_factorial(alpha, fam, h)
    for point in stencils.lattice_points(cell.n, h):
        factorial = math.prod((factorial_power_eval(a, fam, h, x) for a, x in zip(alpha, point)), start=Fraction(1))
        expansion = sum(
            (c * math.prod((x ** b for b, x in zip(beta, point)), start=Fraction(1)) for beta, c in forward.items()),
            Fraction(0),
        )
        if factorial != expansion:
            return f"at {_point(point)}: {format_rational(factorial)}", f"at {_point(point)}: {format_rational(expansion)}"
        power = math.prod((x ** a for a, x in zip(alpha, point)), start=Fraction(1))
        back = sum(
            (
                c * math.prod((factorial_power_eval(b, fam, h, x) for b, x in zip(beta, point)), start=Fraction(1))
                for beta, c in backward.items()
            ),
            Fraction(0),
        )
        if power != back:
            return f"at {_point(point)}: {format_rational(power)}", f"at {_point(point)}: {format_rational(back)}"
    return AGREE


def check_nested_coefficients(cell: GridCell, inputs: Inputs):
    alpha = _only(inputs["f"])
    true = factorial_to_monomial(alpha, cell.family, 1)
    for degree in range(cell.k + 1):
        nested = nested_sum_coefficient(alpha, degree, cell.family, "first")
        for beta in multi_indices(cell.n, degree):
            actual = true.get(beta, Fraction(0))
            if actual != nested:
                label = f"K[{list(alpha)}][{list(beta)}]"
                return f"{label} = {format_rational(actual)}", f"{label} = {format_rational(nested)}"
    return AGREE


def check_stirling_round_trip(cell: GridCell, inputs: Inputs):
    f = inputs["f"]
    alpha = _only(f)
    n, h, fam = cell.n, cell.h, cell.family
    through_factorial = LatticePolynomial.from_monomials(n, h, fam, {alpha: CliffordElement.scalar(n)})
    monomial_again = LatticePolynomial(n, h, fam, through_factorial.to_monomials())
    factorial_again = LatticePolynomial.from_monomials(n, h, fam, f.to_monomials())
    return (monomial_again, factorial_again), (f, f)


# Fischer inner product and decompositions

def check_positivity(cell: GridCell, inputs: Inputs):
    value = fischer_inner_product(inputs["f"], inputs["f"])
    return _verdict(value > 0, f"[P, P] = {format_rational(value)}", "[P, P] > 0")


def check_symmetry(cell: GridCell, inputs: Inputs):
    p, q = inputs["f"], inputs["g"]
    return fischer_inner_product(p, q), fischer_inner_product(q, p)


def check_operator_form(cell: GridCell, inputs: Inputs):
    p, q = inputs["f"], inputs["g"]
    return fischer_inner_product(p, q), operator_form_inner_product(p, q)


def check_adjointness(cell: GridCell, inputs: Inputs):
    space = monogenic_space(cell.n, cell.h, cell.family)
    return adjoint_sides(space, inputs["p"], inputs["q"])


def check_dirac_lowers_degree(cell: GridCell, inputs: Inputs):
    image = apply_dirac(cell.sign, inputs["f"])
    lower = GradedComponentBasis(cell.n, cell.h, cell.family, cell.k - 1)
    stray = lower.stray_terms(image)
    return ", ".join(stray) or "none", "none"


def check_orthogonal_splitting(cell: GridCell, inputs: Inputs):
    space = monogenic_space(cell.n, cell.h, cell.family)
    certificate = orthogonality_certificate(cell.k, cell.n, cell.h, cell.family, space=space)
    top_lift = FunctionOperator("top-lift", space.top_lift)
    rank = assemble_matrix(top_lift, space.component(cell.k - 1), space.component(cell.k)).rank()
    observed = (certificate.top_orthogonal, certificate.kernel_dimension + rank)
    return observed, (True, space.component(cell.k).size)


def check_lift_homogeneous(cell: GridCell, inputs: Inputs):
    space = monogenic_space(cell.n, cell.h, cell.family)
    lower, target = space.component(cell.k - 1), space.component(cell.k)
    for index in range(lower.size):
        stray = target.stray_terms(space.lift(lower.element(index)))
        if stray:
            return f"(mh) {lower.element_label(index)} has {', '.join(stray)}", "none"
    return "none", "none"


def check_dimension_accounting(cell: GridCell, inputs: Inputs):
    account = dimension_accounting(cell.k, cell.n, cell.h, cell.family)
    observed = (
        f"kernel {account.kernel_dimension} + rank {account.rank} = {account.source_dimension}, "
        f"expected {account.expected_dimension}"
    )
    return _verdict(account.holds, observed, "kernel + rank = dim Pi_k")


def _decomposition(strategy: str, decompose):
    def check(cell: GridCell, inputs: Inputs):
        result = decompose(cell, inputs["f"], strategy)
        ok = _decomposition_holds(result)
        if strategy == "exact":
            ok = ok and result.residual.is_zero()
        return _verdict(ok, _result_text(result), "annihilated components with the residual contract")

    return check


def _monogenic_decomposition(cell: GridCell, p: LatticePolynomial, strategy: str) -> FischerResult:
    return fischer_decompose(p, strategy)


def _harmonic_decomposition(cell: GridCell, p: LatticePolynomial, strategy: str) -> FischerResult:
    return harmonic_fischer_decompose(p, strategy)


def _mixed_decomposition(cell: GridCell, p: LatticePolynomial, strategy: str) -> FischerResult:
    return quaternionic_fischer_decompose(p, _variant(cell), strategy)


# Difference operators

def _stencil_check(name: str, algebraic, kind: str, parameter=None):
    """Algebraic operator against its stencil for both difference signs."""

    def check(cell: GridCell, inputs: Inputs):
        f = inputs["f"]
        reference = stencils.LatticeFunction.from_polynomial(f)
        r = parameter(cell) if parameter else None
        pairs = []
        for sign in (cell.sign, -cell.sign):
            expected = algebraic(sign, f) if r is None else algebraic(sign, r, f)
            pairs.append((
                f"{name}{'+' if sign > 0 else '-'}",
                expected,
                stencils.apply_stencil(kind, reference, sign, parameter=r),
            ))
        return _against_stencils(pairs)

    return check


def check_product_expansion(cell: GridCell, inputs: Inputs):
    f, s = inputs["f"], cell.sign
    lhs = _mh(apply_dirac(s, f))
    rhs = f.like()
    for axis in range(1, cell.n + 1):
        rhs = rhs - apply_partial(axis, s, f).multiply_by_coordinate(axis)
    for j in range(1, cell.n + 1):
        for k in range(j + 1, cell.n + 1):
            rhs = rhs + apply_L(s, j, k, f).left_multiply(CliffordElement.basis(cell.n, j, k))
    return lhs, rhs


def check_euler_gamma_split(cell: GridCell, inputs: Inputs):
    f, s = inputs["f"], cell.sign
    return _mh(apply_dirac(s, f)), -(apply_euler(s, f) + apply_gamma(s, f))


def check_dirac_after_variable(cell: GridCell, inputs: Inputs):
    f, s = inputs["f"], cell.sign
    rhs = apply_R(s, _half_n(cell), f).scale(-2) + apply_euler(s, f) + apply_gamma(s, f)
    return apply_dirac(s, _mh(f)), rhs


def check_dirac_euler(cell: GridCell, inputs: Inputs):
    f, s = inputs["f"], cell.sign
    return apply_dirac(s, apply_euler(s, f)), apply_dirac(s, f) + apply_euler(s, apply_dirac(s, f))


def check_dirac_variable(cell: GridCell, inputs: Inputs):
    f, s = inputs["f"], cell.sign
    rhs = apply_V(s, _half_n(cell), f).scale(-2) - _mh(apply_dirac(s, f))
    return apply_dirac(s, _mh(f)), rhs


_SHIFTS = (Fraction(1, 2), Fraction(1), Fraction(3, 2))


def _intertwining(operator):
    def check(cell: GridCell, inputs: Inputs):
        f, s = inputs["f"], cell.sign
        lhs = tuple(apply_dirac(s, operator(s, r, f)) for r in _SHIFTS)
        rhs = tuple(operator(s, r + 1, apply_dirac(s, f)) for r in _SHIFTS)
        return lhs, rhs

    return check


def _commutes(operator):
    def check(cell: GridCell, inputs: Inputs):
        f, s = inputs["f"], cell.sign
        return apply_dirac(s, operator(s, f)), operator(s, apply_dirac(s, f))

    return check


def _v_chain(cell: GridCell, m: LatticePolynomial, s: int) -> LatticePolynomial:
    """``V_{n/2+s-2} ... V_{n/2} m`` (just ``V_{n/2} m`` for ``s = 2``)."""
    base = _half_n(cell)
    for offset in range(0, s - 1):
        m = apply_V(cell.sign, base + offset, m)
    return m


def _iterated(powers: Sequence[int]):
    def check(cell: GridCell, inputs: Inputs):
        m, sign = inputs["m"], cell.sign
        lhs = tuple(_dirac_power(sign, _mh_power(m, s), s) for s in powers)
        rhs = tuple(_v_chain(cell, m, s).scale((-2) ** s) for s in powers)
        return lhs, rhs

    return check


def check_iterated_kernel(cell: GridCell, inputs: Inputs):
    m, sign = inputs["m"], cell.sign
    lhs = tuple(_dirac_power(sign, _mh_power(m, s), s + 1) for s in (1, 2, 3))
    return lhs, tuple(m.like() for _ in lhs)


# Summation formulas

def check_r_inverse(cell: GridCell, inputs: Inputs):
    f, s = inputs["f"], cell.sign
    shifts = sorted({Fraction(1, 2), Fraction(1), _half_n(cell), Fraction(3, 2)})
    lhs = tuple(invert_R(s, r, apply_R(s, r, f)) for r in shifts)
    lhs += tuple(apply_R(s, r, invert_R(s, r, f)) for r in shifts)
    return lhs, tuple(f for _ in lhs)


def check_j_summation(cell: GridCell, inputs: Inputs):
    f, s = inputs["f"], cell.sign
    return summation_polynomial("J", s, 1, apply_R(s, 1, f)), f


def check_w_summation(cell: GridCell, inputs: Inputs):
    f, s = inputs["f"], cell.sign
    return apply_V(s, 1, summation_polynomial("W", s, 1, f)), f


# Eigen-formulas and products with the vector variable

def _eigen(operator, factor):
    def check(cell: GridCell, inputs: Inputs):
        f = inputs["f"]
        return operator(cell, f), f.scale(factor(cell))

    return check


def _nonsingular(cell: GridCell) -> bool:
    """``1 +/- h`` is invertible."""
    return 1 + cell.sign * cell.h != 0


def _a_eigenvalue(cell: GridCell) -> Fraction:
    return cell.k * cell.h ** 2 / (1 + cell.sign * cell.h)


def check_b_variable(cell: GridCell, inputs: Inputs):
    f, s, h = inputs["f"], cell.sign, cell.h
    rhs = _mh(apply_B(s, f)) + _one_pm(cell, f).scale(h) + apply_dirac(s, f).scale(h * h)
    return apply_B(s, _mh(f)), rhs


def check_c_variable(cell: GridCell, inputs: Inputs):
    f, s = inputs["f"], cell.sign
    return apply_C(s, _mh(f)), _mh(apply_C(s, f)) - apply_euler(s, f)


def check_a_variable(cell: GridCell, inputs: Inputs):
    f, s = inputs["f"], cell.sign
    return apply_A(s, _mh(f)), _mh(apply_A(s, f)) - apply_C(s, f).scale(s * cell.h)


def check_e_variable(cell: GridCell, inputs: Inputs):
    f, s = inputs["f"], cell.sign
    return apply_euler(s, _mh(f)), _mh(apply_euler(s, f)) + apply_C(s, f)


def check_r_variable(cell: GridCell, inputs: Inputs):
    f, s, r = inputs["f"], cell.sign, _half_n(cell)
    return apply_R(s, r, _mh(f)), _mh(apply_R(s, r, f)) + apply_C(s, f).scale(1 + s * cell.h)


def check_v_variable(cell: GridCell, inputs: Inputs):
    f, s, r, h = inputs["f"], cell.sign, _half_n(cell), cell.h
    correction = (_one_pm(cell, f).scale(h) + apply_dirac(s, f).scale(h * h)).scale(Fraction(1, 2))
    rhs = _mh(apply_V(s, r, f)) + apply_C(s, f).scale(1 + s * h) + correction
    return apply_V(s, r, _mh(f)), rhs


def check_gamma_variable(cell: GridCell, inputs: Inputs):
    m, s, h, k = inputs["m"], cell.sign, cell.h, cell.k
    factor = cell.n + k - 2 * k * h ** 2 / (1 + s * h) + s * h * k
    return apply_gamma(s, _mh(m)), _mh(m).scale(factor) - apply_C(s, m)


def check_dirac_variable_squared(cell: GridCell, inputs: Inputs):
    m, s, h, k = inputs["m"], cell.sign, cell.h, cell.k
    rhs = _mh(m).scale(s * h * k) - apply_C(s, m).scale(2 + 2 * s * h)
    return apply_dirac(s, _mh_power(m, 2)), rhs


def check_euler_variable_squared(cell: GridCell, inputs: Inputs):
    m, s, k = inputs["m"], cell.sign, cell.k
    rhs = _mh_power(m, 2).scale(k) + _mh(apply_C(s, m)).scale(2) - m.scale(k)
    return apply_euler(s, _mh_power(m, 2)), rhs


def check_dirac_variable_squared_short(cell: GridCell, inputs: Inputs):
    m, s, h = inputs["m"], cell.sign, cell.h
    rhs = -apply_C(s, m).scale(2 + 2 * s * h) + _one_pm(cell, m).scale(h)
    return apply_dirac(s, _mh_power(m, 2)), rhs


def check_gamma_variable_squared(cell: GridCell, inputs: Inputs):
    m, s, h, k = inputs["m"], cell.sign, cell.h, cell.k
    rhs = (
        -_mh_power(m, 2).scale(k)
        + _mh(apply_C(s, m)).scale(2 * s)
        + m.scale(k)
        - _one_pm(cell, _mh(m)).scale(h)
    )
    return apply_gamma(s, _mh_power(m, 2)), rhs


# Homogeneous powers

def _power(cell: GridCell, s: int) -> LatticePolynomial:
    return homogeneous_power(s, cell.n, cell.family, cell.h)


def check_c_raises_power(cell: GridCell, inputs: Inputs):
    return apply_C(cell.sign, _power(cell, cell.k)), _power(cell, cell.k + 1)


def check_dirac_lowers_power(cell: GridCell, inputs: Inputs):
    s = cell.k
    return apply_dirac(cell.sign, _power(cell, s)), _power(cell, s - 1).scale(-s)


def check_dirac_even_power(cell: GridCell, inputs: Inputs):
    s = 2 * cell.k
    return apply_dirac(cell.sign, _power(cell, s)), _power(cell, s - 1).scale(-s)


def check_dirac_odd_power(cell: GridCell, inputs: Inputs):
    s = 2 * cell.k + 1
    return apply_dirac(cell.sign, _power(cell, s)), _power(cell, s - 1).scale(-(2 * cell.k + cell.n))


def check_euler_power(cell: GridCell, inputs: Inputs):
    p = _power(cell, cell.k)
    return apply_euler(cell.sign, p), p.scale(cell.k)


# Laplacian

def check_laplacian_stencil(cell: GridCell, inputs: Inputs):
    f = inputs["f"]
    reference = stencils.laplacian(stencils.LatticeFunction.from_polynomial(f), order="+-")
    return _against_stencils([("lap", apply_laplacian(f), reference)])


def check_one_sided_factorization(cell: GridCell, inputs: Inputs):
    f, s = inputs["f"], cell.sign
    return apply_dirac(-s, apply_dirac(s, f)), -apply_laplacian(f)


def check_norm_pairing(cell: GridCell, inputs: Inputs):
    p, q = inputs["p"], inputs["q"]
    norm = squared_norm_polynomial(cell.n, cell.h, cell.family)
    return fischer_inner_product(norm.multiply(p), q), fischer_inner_product(p, apply_laplacian(q))


def check_square_pairing(cell: GridCell, inputs: Inputs):
    p, q = inputs["p"], inputs["q"]
    return fischer_inner_product(_mh_power(p, 2), q), -fischer_inner_product(p, apply_laplacian(q))


def check_harmonic_dimension(cell: GridCell, inputs: Inputs):
    basis = harmonic_kernel(cell.k, cell.n, cell.h, cell.family)
    blades = 2 ** cell.n

    def size(d: int) -> int:
        return math.comb(d + cell.n - 1, cell.n - 1) * blades if d >= 0 else 0

    return basis.dimension, size(cell.k) - size(cell.k - 2)


# Quaternionic operators

def _q(f: LatticePolynomial) -> QuaternionLatticePolynomial:
    return QuaternionLatticePolynomial(f)


def check_block_form(cell: GridCell, inputs: Inputs):
    variant = _variant(cell)
    return apply_mixed_dirac(variant, inputs["f"]), block_form(variant, inputs["f"])


def check_factorization(cell: GridCell, inputs: Inputs):
    report = verify_laplacian_factorization(inputs["f"])
    lhs = (report.plus_minus_after_minus_plus, report.minus_plus_after_plus_minus)
    return lhs, (report.negative_laplacian, report.negative_laplacian)


def check_div_curl(cell: GridCell, inputs: Inputs):
    vector = _q(inputs["f"]).vector
    image = discrete_div(cell.sign, discrete_curl(cell.sign, vector))
    return image, image.like()


def check_curl_grad(cell: GridCell, inputs: Inputs):
    scalar = _q(inputs["f"]).scalar
    image = _vector(discrete_curl(cell.sign, discrete_grad(cell.sign, scalar)))
    return image, image.like()


def check_curl_curl(cell: GridCell, inputs: Inputs):
    a = cell.sign
    vector = _q(inputs["f"]).vector
    lhs = discrete_curl(a, discrete_curl(-a, vector))
    gradient = discrete_grad(-a, discrete_div(a, vector))
    rhs = [g - lap for g, lap in zip(gradient, vector_laplacian(vector))]
    return _vector(lhs), _vector(rhs)


def check_variable_matrix(cell: GridCell, inputs: Inputs):
    for m in itertools.product(range(-1, 2), repeat=3):
        coords = [Fraction(x) for x in m]
        printed = printed_variable_matrix(*coords)
        hamilton = hamilton_left_matrix([Fraction(0)] + coords)
        if printed != hamilton:
            return f"m={list(m)}: {render(printed)}", f"m={list(m)}: {render(hamilton)}"
    return AGREE


def check_mixed_inclusion(cell: GridCell, inputs: Inputs):
    failure = mixed_homogeneous_closure(cell.k, cell.h, _variant(cell))
    return ("closed" if failure is None else failure.detail), "closed"


def _product_formula(header: Tuple[int, int, int]):
    def check(cell: GridCell, inputs: Inputs):
        variant = _variant(cell)
        f = inputs["f"]
        lhs = multiply_by_quaternion_variable(apply_mixed_dirac(variant, f).polynomial)
        return lhs, product_formula(variant, f, header).polynomial

    return check


def _gamma_transcription(transcription: Optional[str]):
    def check(cell: GridCell, inputs: Inputs):
        variant = _variant(cell)
        chosen = transcription
        if chosen is None:
            resolution = resolve_gamma_transcription(variant, cell.h)
            if not resolution.resolved:
                return "no consistent reading: " + _rejections(resolution), "a consistent reading"
            chosen = resolution.chosen
        defect = euler_gamma_identity_defect(variant, inputs["f"], chosen).polynomial
        return defect, defect.like()

    return check


def _rejections(resolution) -> str:
    return "; ".join(f"{v.transcription} fails on {v.witness}" for v in resolution.verdicts)


def check_gamma_reading(cell: GridCell, inputs: Inputs):
    resolution = resolve_gamma_transcription(_variant(cell), cell.h)
    chosen = resolution.chosen or "none"
    return chosen, "block-sign+odd-orientation"


def check_mixed_euler_eigen(cell: GridCell, inputs: Inputs):
    f = inputs["f"]
    return apply_mixed_euler(_variant(cell), f), _q(f.scale(cell.k))


def check_mixed_gamma_eigen(cell: GridCell, inputs: Inputs):
    m = inputs["m"]
    _, gamma = quaternionic_euler_gamma(_variant(cell), m)
    return gamma, _q(m.scale(-cell.k))


def check_mixed_dirac_euler(cell: GridCell, inputs: Inputs):
    variant, f = _variant(cell), inputs["f"]
    lhs = apply_mixed_dirac(variant, apply_mixed_euler(variant, f))
    rhs = apply_mixed_dirac(variant, f) + apply_mixed_euler(variant, apply_mixed_dirac(variant, f))
    return lhs, rhs


def check_harmonic_split(cell: GridCell, inputs: Inputs):
    split = harmonic_as_monogenic(inputs["m"], _variant(cell))
    return _verdict(split.holds, _result_text(split.result), "H = M_k + (mh) M_(k-1)")


def _mixed_space_of(cell: GridCell) -> FischerSpace:
    return mixed_space(cell.h, _variant(cell))


def _monogenic_space_of(cell: GridCell) -> FischerSpace:
    return monogenic_space(cell.n, cell.h, cell.family)


def _harmonic_space_of(cell: GridCell) -> FischerSpace:
    return quaternion_harmonic_space(cell.h, cell.family)


def _probe(n: int, k: int, h: int, sign: int, alpha: Tuple[int, ...]) -> Tuple[GridCell, Inputs]:
    cell = GridCell(n, k, Fraction(h), sign)
    return cell, {"f": LatticePolynomial.monomial(n, cell.h, cell.family, alpha)}


_ONE_D = {"dimensions": (1,), "mesh_widths": (Fraction(1),)}
_HEAVY = {"max_degree": 3, "max_trials": 3}
# Linear in f, so the scalar basis monomials are complete; outputs stay within
# the degree the oracle window determines
_STENCIL = {"max_degree": 3, "max_trials": 0}
_PRODUCT_RULE = {"max_degree": 2, "max_trials": 2}


CATALOGUE: Tuple[ClaimRecord, ...] = (
    # factorial powers
    ClaimRecord("Eq2", "forward/backward product rule with the second factor shifted", "factorial", EXACT,
                check_product_rule_shifted_right, with_random_factor, **_PRODUCT_RULE),
    ClaimRecord("Eq3", "forward/backward product rule with the first factor shifted", "factorial", EXACT,
                check_product_rule_shifted_left, with_random_factor, **_PRODUCT_RULE),
    ClaimRecord("P1", "factorial power recurrence (x)^(s+1) = (x -/+ s h)(x)^(s)", "factorial", EXACT,
                check_recurrence, dimensions=(1,), degrees=tuple(range(7))),
    ClaimRecord("P2", "matched difference lowers a factorial power diagonally", "factorial", EXACT,
                check_matched_difference, monomials, min_degree=1),
    ClaimRecord("P3", "mismatched difference lowers a factorial power with a shift", "factorial", EXACT,
                check_mismatched_difference, monomials, min_degree=1),
    ClaimRecord("P4", "factorial powers tend to x^s as h halves", "factorial", EXACT,
                check_limit_one_dimensional, degrees=(1, 2, 3, 4), **_ONE_D),
    ClaimRecord("Lemma3.1", "Euler stencil has eigenvalue |alpha| on factorial powers", "factorial", EXACT,
                check_euler_eigenvalue, homogeneous(("f", 0)), max_trials=5),
    ClaimRecord("Lemma3.2", "d^beta (mh)^(alpha) = alpha! delta for |beta| = |alpha|", "factorial", EXACT,
                check_difference_duality, monomials),
    ClaimRecord("Lemma3.3", "multi-index factorial powers approximate x^alpha", "factorial", EXACT,
                check_limit_multi_index, monomials, mesh_widths=(Fraction(1),), min_degree=1, max_degree=4),
    ClaimRecord("Thm3.1", "unscaled Stirling relations between x^s and (x)^(s) at h = 1", "factorial", EXACT,
                check_printed_stirling, degrees=tuple(range(7)), **_ONE_D),
    ClaimRecord("Thm3.1-scaled", "Stirling relations with the h^(s-k) mesh factors", "factorial", EXACT,
                check_scaled_stirling, dimensions=(1,), degrees=tuple(range(7)),
                mesh_widths=(Fraction(1), Fraction(1, 2), Fraction(1, 3))),
    ClaimRecord("Thm3.1-any-h", "unscaled Stirling relations at any mesh width", "factorial", HYPOTHESIS,
                check_printed_stirling, dimensions=(1,), degrees=tuple(range(7)),
                mesh_widths=(Fraction(1), Fraction(1, 2))),
    ClaimRecord("Thm3.2", "multi-index Stirling expansions as products of one-dimensional ones", "factorial", EXACT,
                check_multi_index_stirling, monomials),
    ClaimRecord("Thm3.2-nested", "nested-sum Stirling coefficients depending only on |beta|", "factorial", HYPOTHESIS,
                check_nested_coefficients, monomials, dimensions=(2, 3), mesh_widths=(Fraction(1),)),
    ClaimRecord("Stirling-roundtrip", "monomial to factorial and back is the identity", "factorial", EXACT,
                check_stirling_round_trip, monomials, degrees=tuple(range(7)),
                mesh_widths=(Fraction(1), Fraction(1, 2), Fraction(1, 3))),

    # Fischer inner product and decompositions
    ClaimRecord("Eq6", "Fischer inner product is positive definite", "fischer", EXACT,
                check_positivity, homogeneous(("f", 0))),
    ClaimRecord("Eq6-symmetry", "Fischer inner product is symmetric", "fischer", EXACT,
                check_symmetry, homogeneous(("f", 0), ("g", 0))),
    ClaimRecord("Eq8", "Fischer inner product equals Sc(conj(P)(d) Q)(0)", "fischer", EXACT,
                check_operator_form, homogeneous(("f", 0), ("g", 0))),
    ClaimRecord("Eq10", "[(mh) P, Q] = -[P, D Q]", "fischer", EXACT,
                check_adjointness, homogeneous(("p", -1), ("q", 0)), min_degree=1),
    ClaimRecord("Lemma3.4", "D maps Pi_k into Pi_(k-1)", "fischer", EXACT,
                check_dirac_lowers_degree, homogeneous(("f", 0)), min_degree=1),
    ClaimRecord("Thm3.3", "Pi_k splits orthogonally into M_k and the top-grade lift of Pi_(k-1)", "fischer", EXACT,
                check_orthogonal_splitting, min_degree=1, max_degree=3),
    ClaimRecord("Thm3.3-literal", "(mh) Pi_(k-1) lies inside Pi_k", "fischer", HYPOTHESIS,
                check_lift_homogeneous, min_degree=1, max_degree=3),
    ClaimRecord("Thm3.3-accounting", "dim M_k + rank D on Pi_k = dim Pi_k", "fischer", EXACT,
                check_dimension_accounting),
    ClaimRecord("Thm3.4-graded", "graded Fischer decomposition into monogenic components", "fischer", EXACT,
                _decomposition("graded", _monogenic_decomposition),
                homogeneous(("f", 0), basis_limit=3), **_HEAVY),
    ClaimRecord("Thm3.4-exact", "Fischer decomposition as a literal polynomial identity", "fischer", HYPOTHESIS,
                _decomposition("exact", _monogenic_decomposition),
                homogeneous(("f", 0), basis_limit=3), **_HEAVY),

    # difference operators
    ClaimRecord("Dirac-stencil", "D_h equals sum_i e_i d^(i) pointwise", "operators", EXACT,
                _stencil_check("D", apply_dirac, "dirac"), homogeneous(("f", 0)), **_STENCIL),
    ClaimRecord("Eq9", "second order operator A_h against its stencil", "operators", EXACT,
                _stencil_check("A", apply_A, "A"), homogeneous(("f", 0)), **_STENCIL),
    ClaimRecord("Eq11", "(mh) D = -sum x_i d^i + sum e_j e_k L_jk", "operators", EXACT,
                check_product_expansion, homogeneous(("f", 0))),
    ClaimRecord("Eq12", "(mh) D = -(E + Gamma)", "operators", EXACT,
                check_euler_gamma_split, homogeneous(("f", 0))),
    ClaimRecord("Eq13", "operator B_h against its stencil", "operators", EXACT,
                _stencil_check("B", apply_B, "B"), homogeneous(("f", 0)), **_STENCIL),
    ClaimRecord("Eq14", "operator C_h against its stencil", "operators", EXACT,
                _stencil_check("C", apply_C, "C"), homogeneous(("f", 0)), **_STENCIL),
    ClaimRecord("Eq15", "operator R_(h,n/2) against its stencil", "operators", EXACT,
                _stencil_check("R", apply_R, "R", _half_n), homogeneous(("f", 0)), **_STENCIL),
    ClaimRecord("Eq16", "operator V_(h,n/2) against its stencil", "operators", EXACT,
                _stencil_check("V", apply_V, "V", _half_n), homogeneous(("f", 0)), **_STENCIL),
    ClaimRecord("Def3.1-euler", "Euler operator against its stencil", "operators", EXACT,
                _stencil_check("E", apply_euler, "euler"), homogeneous(("f", 0)), **_STENCIL),
    ClaimRecord("Def3.1-gamma", "Gamma operator against its stencil", "operators", EXACT,
                _stencil_check("Gamma", apply_gamma, "gamma"), homogeneous(("f", 0)), **_STENCIL),
    ClaimRecord("Eq17", "D (mh) = -2 R_(h,n/2) + E + Gamma", "operators", HYPOTHESIS,
                check_dirac_after_variable, homogeneous(("f", 0))),
    ClaimRecord("Prop3.1", "D E = D + E D", "operators", EXACT,
                check_dirac_euler, homogeneous(("f", 0))),
    ClaimRecord("Prop3.2", "D((mh) f) = -2 V_(h,n/2) f - (mh) D f", "operators", EXACT,
                check_dirac_variable, homogeneous(("f", 0))),
    ClaimRecord("Eq18", "D R_(h,r) = R_(h,r+1) D", "operators", HYPOTHESIS,
                _intertwining(apply_R), homogeneous(("f", 0))),
    ClaimRecord("Eq19", "D V_(h,r) = V_(h,r+1) D", "operators", HYPOTHESIS,
                _intertwining(apply_V), homogeneous(("f", 0))),
    ClaimRecord("DA-commute", "D A_h = A_h D", "operators", HYPOTHESIS,
                _commutes(apply_A), homogeneous(("f", 0)),
                probes=(_probe(1, 2, 1, 1, (2,)),)),
    ClaimRecord("DB-commute", "D B_h = B_h D", "operators", EXACT,
                _commutes(apply_B), homogeneous(("f", 0))),
    ClaimRecord("Eq20", "D^2((mh)^2 M) = 4 V_(h,n/2) M", "operators", HYPOTHESIS,
                _iterated((2,)), kernel_elements(_monogenic_space_of), max_degree=2, max_trials=3),
    ClaimRecord("Eq21", "D^3((mh)^3 M) = (-2)^3 V_(h,n/2+1) V_(h,n/2) M", "operators", HYPOTHESIS,
                _iterated((3,)), kernel_elements(_monogenic_space_of), max_degree=2, max_trials=3),
    ClaimRecord("Eq22", "D^s((mh)^s M) = (-2)^s V_(h,n/2+s-2) ... V_(h,n/2) M", "operators", HYPOTHESIS,
                _iterated((2, 3, 4)), kernel_elements(_monogenic_space_of), max_degree=2, max_trials=3),
    ClaimRecord("Eq22-kernel", "(mh)^s M lies in the kernel of D^(s+1)", "operators", HYPOTHESIS,
                check_iterated_kernel, kernel_elements(_monogenic_space_of), max_degree=2, max_trials=3),

    # summation formulas
    ClaimRecord("Thm3.5", "J_(h,r) R_(h,r) = I = R_(h,r) J_(h,r)", "summation", EXACT,
                check_r_inverse, homogeneous(("f", 0))),
    ClaimRecord("Thm3.5-summation", "the dilation sum J_(h,1) inverts R_(h,1)", "summation", HYPOTHESIS,
                check_j_summation, homogeneous(("f", 0)), max_trials=5),
    ClaimRecord("W-noninverse", "the dilation sum W_(h,1) is not an inverse of V_(h,1)", "summation", NEGATIVE,
                check_w_summation, homogeneous(("f", 0)), max_trials=5),

    # operator calculus
    ClaimRecord("Eq23", "B_h P_k = +/- k h P_k", "calculus", HYPOTHESIS,
                _eigen(lambda c, f: apply_B(c.sign, f), lambda c: c.sign * c.k * c.h), homogeneous(("f", 0))),
    ClaimRecord("Eq24", "A_h P_k = k h^2 / (1 +/- h) P_k", "calculus", HYPOTHESIS,
                _eigen(lambda c, f: apply_A(c.sign, f), _a_eigenvalue), homogeneous(("f", 0)),
                probes=(_probe(1, 2, 1, 1, (2,)),), applies=_nonsingular),
    ClaimRecord("Eq25", "R_(h,r) P_k = (r + k - k h^2 / (1 +/- h)) P_k", "calculus", HYPOTHESIS,
                _eigen(lambda c, f: apply_R(c.sign, _half_n(c), f),
                       lambda c: _half_n(c) + c.k - _a_eigenvalue(c)),
                homogeneous(("f", 0)), applies=_nonsingular),
    ClaimRecord("Eq26", "V_(h,r) P_k = (r + (1 +/- h/2) k - k h^2 / (1 +/- h)) P_k", "calculus", HYPOTHESIS,
                _eigen(lambda c, f: apply_V(c.sign, _half_n(c), f),
                       lambda c: _half_n(c) + (1 + c.sign * c.h / 2) * c.k - _a_eigenvalue(c)),
                homogeneous(("f", 0)), applies=_nonsingular),
    ClaimRecord("Eq27", "B((mh) f) = (mh) B f + h 1 f + h^2 D f", "calculus", HYPOTHESIS,
                check_b_variable, homogeneous(("f", 0))),
    ClaimRecord("Eq28", "C((mh) f) = (mh) C f - E f", "calculus", HYPOTHESIS,
                check_c_variable, homogeneous(("f", 0))),
    ClaimRecord("Eq29", "A((mh) f) = (mh) A f -/+ h C f", "calculus", HYPOTHESIS,
                check_a_variable, homogeneous(("f", 0))),
    ClaimRecord("Eq30", "E((mh) f) = (mh) E f + C f", "calculus", HYPOTHESIS,
                check_e_variable, homogeneous(("f", 0))),
    ClaimRecord("Eq31", "R_(h,r)((mh) f) = (mh) R_(h,r) f + (1 +/- h) C f", "calculus", HYPOTHESIS,
                check_r_variable, homogeneous(("f", 0))),
    ClaimRecord("Eq32", "V_(h,r)((mh) f) = (mh) V f + (1 +/- h) C f + (h 1 f + h^2 D f)/2", "calculus", HYPOTHESIS,
                check_v_variable, homogeneous(("f", 0))),
    ClaimRecord("Eq33", "Gamma((mh) M_k) in terms of (mh) M_k and C M_k", "calculus", HYPOTHESIS,
                check_gamma_variable, kernel_elements(_monogenic_space_of), **_HEAVY, applies=_nonsingular),
    ClaimRecord("Eq34", "D((mh)^2 M_k) = +/- h k (mh) M_k - (2 +/- 2h) C M_k", "calculus", HYPOTHESIS,
                check_dirac_variable_squared, kernel_elements(_monogenic_space_of), **_HEAVY),
    ClaimRecord("Eq35", "E((mh)^2 M_k) = k (mh)^2 M_k + 2 (mh) C M_k - k M_k", "calculus", HYPOTHESIS,
                check_euler_variable_squared, kernel_elements(_monogenic_space_of), **_HEAVY),
    ClaimRecord("Eq36", "D((mh)^2 M_k) = -(2 +/- 2h) C M_k + h 1 M_k", "calculus", HYPOTHESIS,
                check_dirac_variable_squared_short, kernel_elements(_monogenic_space_of), **_HEAVY),
    ClaimRecord("Eq36-gamma", "Gamma((mh)^2 M_k) in terms of (mh)^2 M_k, (mh) C M_k and M_k", "calculus", HYPOTHESIS,
                check_gamma_variable_squared, kernel_elements(_monogenic_space_of), **_HEAVY),

    # homogeneous powers
    ClaimRecord("H-C", "C_h H_s = H_(s+1)", "powers", EXACT, check_c_raises_power),
    ClaimRecord("H-D", "D_h H_s = -s H_(s-1) for every s", "powers", HYPOTHESIS,
                check_dirac_lowers_power, min_degree=1),
    ClaimRecord("H-D-even", "D_h H_(2j) = -2j H_(2j-1)", "powers", EXACT,
                check_dirac_even_power, min_degree=1, max_degree=2),
    ClaimRecord("H-D-odd", "D_h H_(2j+1) = -(2j+n) H_(2j)", "powers", EXACT,
                check_dirac_odd_power, max_degree=2),
    ClaimRecord("H-E", "E_h H_s = s H_s", "powers", EXACT, check_euler_power),

    # Laplacian
    ClaimRecord("Eq38", "sum d^(-i) d^(+i) equals the dual stencil sum d^(+i) d^(-i)", "laplacian", EXACT,
                check_laplacian_stencil, homogeneous(("f", 0)), max_trials=5),
    ClaimRecord("Eq38-nonfactorization", "D^(-/+) D^(+/-) differs from -Delta_h", "laplacian", NEGATIVE,
                check_one_sided_factorization, homogeneous(("f", 0)), max_trials=5),
    ClaimRecord("Eq4-harmonic-pairing", "[|mh|^2 P, Q] = [P, Delta_h Q]", "laplacian", EXACT,
                check_norm_pairing, homogeneous(("p", -2), ("q", 0)), min_degree=2),
    ClaimRecord("Eq4-harmonic-pairing-twin", "[(mh)^2 P, Q] = -[P, Delta_h Q]", "laplacian", EXACT,
                check_square_pairing, homogeneous(("p", -2), ("q", 0)), min_degree=2),
    ClaimRecord("Thm4.2-graded", "graded Fischer decomposition into harmonic components", "laplacian", HYPOTHESIS,
                _decomposition("graded", _harmonic_decomposition),
                homogeneous(("f", 0), basis_limit=3), **_HEAVY),
    ClaimRecord("Thm4.2-exact", "harmonic Fischer decomposition as a literal identity", "laplacian", HYPOTHESIS,
                _decomposition("exact", _harmonic_decomposition),
                homogeneous(("f", 0), basis_limit=3), **_HEAVY),
    ClaimRecord("Thm4.2-dimension", "dim H_k = dim Pi_k - dim Pi_(k-2)", "laplacian", HYPOTHESIS,
                check_harmonic_dimension),

    # quaternionic operators
    ClaimRecord("Eq39", "D^(-+) matrix equals (-div, grad + curl) with backward grad/div", "quaternion", EXACT,
                check_block_form, quaternions(), max_trials=5, **_quaternion_cells(signs=(-1,))),
    ClaimRecord("Eq40", "D^(+-) matrix equals (-div, grad + curl) with forward grad/div", "quaternion", EXACT,
                check_block_form, quaternions(), max_trials=5, **_quaternion_cells(signs=(1,))),
    ClaimRecord("Eq41", "D^(+-) D^(-+) = -Delta_h = D^(-+) D^(+-)", "quaternion", EXACT,
                check_factorization, quaternions(), max_trials=5, **_quaternion_cells()),
    ClaimRecord("Eq41-div-curl", "div curl = 0 with matching signs", "quaternion", EXACT,
                check_div_curl, quaternions(), max_trials=5, **_quaternion_cells()),
    ClaimRecord("Eq41-curl-grad", "curl grad = 0 with matching signs", "quaternion", EXACT,
                check_curl_grad, quaternions(), max_trials=5, **_quaternion_cells()),
    ClaimRecord("Eq41-curl-curl", "curl^a curl^(-a) = grad^(-a) div^a - Delta_h", "quaternion", EXACT,
                check_curl_curl, quaternions(), max_trials=5, **_quaternion_cells()),
    ClaimRecord("Eq4-mh-matrix", "printed 4x4 matrix of (mh) equals Hamilton left multiplication", "quaternion",
                HYPOTHESIS, check_variable_matrix,
                **_quaternion_cells(degrees=(0,), mesh_widths=(Fraction(1),), signs=(1,))),
    ClaimRecord("Eq4-inclusion", "D^(-+) and D^(+-) map Pi_k into Pi_(k-1)", "quaternion", HYPOTHESIS,
                check_mixed_inclusion, min_degree=1, **_quaternion_cells()),
    ClaimRecord("Eq42", "expansion of (mh) D^(-+) with the e0 e1 e3 fourth header", "quaternion", HYPOTHESIS,
                _product_formula((0, 1, 3)), quaternions(), max_trials=5, **_quaternion_cells(signs=(-1,))),
    ClaimRecord("Eq42-e2-header", "expansion of (mh) D^(-+) with the e0 e1 e2 fourth header", "quaternion",
                HYPOTHESIS, _product_formula((0, 1, 2)), quaternions(), max_trials=5,
                **_quaternion_cells(signs=(-1,))),
    ClaimRecord("Eq43", "expansion of (mh) D^(+-) with the e0 e1 e2 fourth header", "quaternion", HYPOTHESIS,
                _product_formula((0, 1, 2)), quaternions(), max_trials=5, **_quaternion_cells(signs=(1,))),
    ClaimRecord("Eq43-e3-header", "expansion of (mh) D^(+-) with the e0 e1 e3 fourth header", "quaternion",
                HYPOTHESIS, _product_formula((0, 1, 3)), quaternions(), max_trials=5,
                **_quaternion_cells(signs=(1,))),
    ClaimRecord("Eq4-gamma-printed", "(mh) D + E + Gamma = 0 with Gamma as tabulated", "quaternion", HYPOTHESIS,
                _gamma_transcription("printed"), quaternions(), max_trials=5, **_quaternion_cells()),
    ClaimRecord("Eq4-gamma-sign-corrected", "(mh) D + E + Gamma = 0 with the h-block sign flipped", "quaternion",
                HYPOTHESIS, _gamma_transcription("block-sign"), quaternions(), max_trials=5,
                **_quaternion_cells()),
    ClaimRecord("Eq4-gamma-header-swapped", "(mh) D + E + Gamma = 0 with e0 e1 e3 as the fourth header",
                "quaternion", HYPOTHESIS, _gamma_transcription("fourth-header"), quaternions(), max_trials=5,
                **_quaternion_cells()),
    ClaimRecord("Eq4-gamma-repairs", "the Gamma table needs the block sign and determinant orientation repairs",
                "quaternion", HYPOTHESIS, check_gamma_reading,
                **_quaternion_cells(degrees=(0,), mesh_widths=(Fraction(1), Fraction(1, 2)))),
    ClaimRecord("Eq4-gamma-resolved", "(mh) D + E + Gamma = 0 under the consistent reading of the table",
                "quaternion", EXACT, _gamma_transcription(None), quaternions(), max_trials=5,
                **_quaternion_cells()),
    ClaimRecord("Eq4-euler-eigen", "quaternionic Euler operator has eigenvalue k on Pi_k", "quaternion", HYPOTHESIS,
                check_mixed_euler_eigen, quaternions(), max_trials=5, **_quaternion_cells()),
    ClaimRecord("Eq4-gamma-eigen", "quaternionic Gamma M_k = -k M_k on the mixed kernel", "quaternion", HYPOTHESIS,
                check_mixed_gamma_eigen, kernel_elements(_mixed_space_of), max_degree=3, max_trials=3,
                **_quaternion_cells()),
    ClaimRecord("Eq4-dirac-euler", "D^(-+) E = D + E D for the quaternionic operators", "quaternion", HYPOTHESIS,
                check_mixed_dirac_euler, quaternions(), max_trials=5, **_quaternion_cells()),
    ClaimRecord("Thm4.1-graded", "graded Fischer decomposition for D^(-+) and D^(+-)", "quaternion", HYPOTHESIS,
                _decomposition("graded", _mixed_decomposition), quaternions(basis_limit=3),
                max_degree=3, max_trials=2, **_quaternion_cells()),
    ClaimRecord("Thm4.1-exact", "mixed Fischer decomposition as a literal identity", "quaternion", HYPOTHESIS,
                _decomposition("exact", _mixed_decomposition), quaternions(basis_limit=3),
                max_degree=3, max_trials=2, **_quaternion_cells()),
    ClaimRecord("Cor4.1", "harmonic H_k = M_k + (mh) M_(k-1) with mixed monogenic components", "quaternion",
                HYPOTHESIS, check_harmonic_split, kernel_elements(_harmonic_space_of, basis_limit=3),
                max_degree=3, max_trials=2, **_quaternion_cells()),
)
