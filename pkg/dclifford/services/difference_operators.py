"""Difference operators acting exactly on lattice polynomials.

Every operator is built from three primitives: the difference that acts
diagonally on a factorial family, the exact lattice shift, and multiplication
by a coordinate. Signs are passed as ``+1`` (forward) or ``-1`` (backward).
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, List, Optional, Protocol, Sequence, Tuple, Union

from dclifford.core.exceptions import ClosureError, RejectedInputError
from dclifford.core.logging import get_logger
from dclifford.services import linalg
from dclifford.services.exact_algebra import (
    CliffordElement,
    RationalLike,
    as_rational,
    format_rational,
)
from dclifford.services.factorial_basis import shift
from dclifford.services.factorial_powers import FamilySign, factorial_power_eval
from dclifford.services.lattice_polynomial import (
    DirectSumBasis,
    GradedComponentBasis,
    LatticePolynomial,
    evaluate,
)

logger = get_logger(__name__)

Basis = Union[GradedComponentBasis, DirectSumBasis]


def as_sign(sign: Union[int, str]) -> int:
    if sign in (1, "+", "+1"):
        return 1
    if sign in (-1, "-", "-1"):
        return -1
    raise RejectedInputError(f"operator sign must be '+' or '-', got '{sign}'")


def sign_text(sign: int) -> str:
    return "+" if sign > 0 else "-"


# Primitive operators

def apply_partial(axis: int, sign: int, p: LatticePolynomial) -> LatticePolynomial:
    """``d^{sign, axis} p``; diagonal on the matched family, via the shift otherwise."""
    sign = as_sign(sign)
    if sign == p.family.operator_sign:
        return p.matched_difference(axis)
    return (shift(p, axis, sign) - p).scale(Fraction(sign) / p.h)


def apply_dirac(sign: int, p: LatticePolynomial) -> LatticePolynomial:
    result = p.like()
    for axis in range(1, p.n + 1):
        unit = CliffordElement.basis(p.n, axis)
        result = result + apply_partial(axis, sign, p).left_multiply(unit)
    return result


def apply_laplacian(p: LatticePolynomial) -> LatticePolynomial:
    """``sum_i d^{-i} d^{+i} p``."""
    result = p.like()
    for axis in range(1, p.n + 1):
        result = result + apply_partial(axis, -1, apply_partial(axis, 1, p))
    return result


def apply_euler(sign: int, p: LatticePolynomial) -> LatticePolynomial:
    """``sum_i (m_i h) (d^{sign,i} p)(mh - sign h e_i)``."""
    sign = as_sign(sign)
    result = p.like()
    for axis in range(1, p.n + 1):
        moved = shift(apply_partial(axis, sign, p), axis, -sign)
        result = result + moved.multiply_by_coordinate(axis)
    return result


def apply_A(sign: int, p: LatticePolynomial) -> LatticePolynomial:
    sign = as_sign(sign)
    result = p.like()
    for axis in range(1, p.n + 1):
        second = apply_partial(axis, sign, apply_partial(axis, -sign, p))
        result = result + second.multiply_by_coordinate(axis)
    return result.scale(-sign * p.h)


def apply_B(sign: int, p: LatticePolynomial) -> LatticePolynomial:
    sign = as_sign(sign)
    result = p.like()
    for axis in range(1, p.n + 1):
        result = result + apply_partial(axis, sign, p)
    return result.scale(sign * p.h)


def apply_C(sign: int, p: LatticePolynomial) -> LatticePolynomial:
    """``sum_i (m_i h) e_i p(mh - sign h e_i)``."""
    sign = as_sign(sign)
    result = p.like()
    for axis in range(1, p.n + 1):
        unit = CliffordElement.basis(p.n, axis)
        moved = shift(p, axis, -sign).left_multiply(unit)
        result = result + moved.multiply_by_coordinate(axis)
    return result


def apply_L(sign: int, j: int, k: int, p: LatticePolynomial) -> LatticePolynomial:
    sign = as_sign(sign)
    return (
        apply_partial(k, sign, p).multiply_by_coordinate(j)
        - apply_partial(j, sign, p).multiply_by_coordinate(k)
    )


def apply_gamma(sign: int, p: LatticePolynomial) -> LatticePolynomial:
    """``-sum_{j<k} e_j e_k L_jk - A``."""
    sign = as_sign(sign)
    result = p.like()
    for j in range(1, p.n + 1):
        for k in range(j + 1, p.n + 1):
            bivector = CliffordElement.basis(p.n, j, k)
            result = result - apply_L(sign, j, k, p).left_multiply(bivector)
    return result - apply_A(sign, p)


def apply_R(sign: int, r: RationalLike, p: LatticePolynomial) -> LatticePolynomial:
    return p.scale(as_rational(r)) + apply_euler(sign, p) - apply_A(sign, p)


def apply_V(sign: int, r: RationalLike, p: LatticePolynomial) -> LatticePolynomial:
    return apply_R(sign, r, p) + apply_B(sign, p).scale(Fraction(1, 2))


def apply_shift(axis: int, direction: int, p: LatticePolynomial) -> LatticePolynomial:
    return shift(p, axis, direction)


def invert_R(sign: int, r: RationalLike, p: LatticePolynomial) -> LatticePolynomial:
    """Solve ``R_r q = p`` degree by degree from the top.

    ``R_r`` acts as ``(r + d)`` on the degree-``d`` part plus terms of lower
    degree, so each step removes the current top degree of the residual.
    """
    sign = as_sign(sign)
    r = as_rational(r)
    if r <= 0:
        raise RejectedInputError(f"R inversion needs r > 0, got {format_rational(r)}")
    residual = p
    solution = p.like()
    for degree in range(p.degree, -1, -1):
        top = residual.graded_component(degree)
        if top.is_zero():
            continue
        piece = top.scale(1 / (r + degree))
        solution = solution + piece
        residual = residual - apply_R(sign, r, piece)
    if not residual.is_zero():
        raise RejectedInputError("R inversion left a nonzero residual")
    return solution


# Summation formulas over the dilation grid

def _grid_size(h: Fraction) -> int:
    if h.numerator != 1:
        raise RejectedInputError(
            f"summation grid needs h = 1/N, got h = {format_rational(h)}"
        )
    return h.denominator


def _summation_order(r: RationalLike) -> int:
    r = as_rational(r)
    if r.denominator != 1 or r < 1:
        raise RejectedInputError(
            f"summation formula needs a positive integer r, got {format_rational(r)}"
        )
    return int(r)


def summation_weight(kind: str, sign: int, r: int, h: Fraction, tau: Fraction) -> Fraction:
    """``(tau - sign h)^{(r-1)}`` for J and ``(tau)^{(r-1)}`` for W, in the family
    matched to ``sign``."""
    family = FamilySign.matched_to(sign)
    base = tau - sign * h if kind == "J" else tau
    return factorial_power_eval(r - 1, family, h, base)


def _summation_grid(sign: int, count: int) -> range:
    # [0,1)_h for the forward sum, (0,1]_h for the backward one
    return range(0, count) if sign > 0 else range(1, count + 1)


def eval_summation(kind: str, sign: int, r: RationalLike, p: LatticePolynomial, point: Sequence[RationalLike]) -> CliffordElement:
    """Literal value of ``sum_{th} h d^{sign}(weight(th) p((th) x))`` at a lattice point."""
    if kind not in ("J", "W"):
        raise RejectedInputError(f"unknown summation kind '{kind}'")
    sign = as_sign(sign)
    order = _summation_order(r)
    count = _grid_size(p.h)
    coords = [as_rational(x) for x in point]
    if len(coords) != p.n:
        raise RejectedInputError(f"point has {len(coords)} coordinates, expected {p.n}")
    if any((x / p.h).denominator != 1 for x in coords):
        raise RejectedInputError("summation point must lie on the lattice")
    h = p.h

    def g(tau: Fraction) -> CliffordElement:
        value = evaluate(p, [tau * x for x in coords])
        return value.scale(summation_weight(kind, sign, order, h, tau))

    total = CliffordElement.zero(p.n)
    for t in _summation_grid(sign, count):
        tau = t * h
        # h d^{+} g(tau) = g(tau + h) - g(tau); h d^{-} g(tau) = g(tau) - g(tau - h)
        total = total + ((g(tau + h) - g(tau)) if sign > 0 else (g(tau) - g(tau - h)))
    return total


def eval_J_summation(sign: int, r: RationalLike, p: LatticePolynomial, point: Sequence[RationalLike]) -> CliffordElement:
    return eval_summation("J", sign, r, p, point)


def eval_W_summation(sign: int, r: RationalLike, p: LatticePolynomial, point: Sequence[RationalLike]) -> CliffordElement:
    return eval_summation("W", sign, r, p, point)


def summation_polynomial(kind: str, sign: int, r: RationalLike, p: LatticePolynomial) -> LatticePolynomial:
    """The summation formula as a polynomial in ``x`` (dilations are exact)."""
    if kind not in ("J", "W"):
        raise RejectedInputError(f"unknown summation kind '{kind}'")
    sign = as_sign(sign)
    order = _summation_order(r)
    count = _grid_size(p.h)
    h = p.h

    def g(tau: Fraction) -> LatticePolynomial:
        return p.dilate(tau).scale(summation_weight(kind, sign, order, h, tau))

    total = p.like()
    for t in _summation_grid(sign, count):
        tau = t * h
        total = total + ((g(tau + h) - g(tau)) if sign > 0 else (g(tau) - g(tau - h)))
    return total


# Operator descriptions

class Operator(Protocol):
    name: str

    def apply(self, p: LatticePolynomial) -> LatticePolynomial:
        ...


_KINDS = ("identity", "partial", "dirac", "laplacian", "euler", "gamma",
          "A", "B", "C", "R", "V", "J", "L", "shift")


@dataclass(frozen=True)
class DifferenceOperator:
    """A named linear operator on lattice polynomials."""
    kind: str
    sign: int = 1
    axis: int = 0
    second_axis: int = 0
    parameter: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise RejectedInputError(f"unknown operator kind '{self.kind}'")
        object.__setattr__(self, "sign", as_sign(self.sign))
        if self.kind in ("R", "V", "J"):
            if self.parameter is None:
                raise RejectedInputError(f"operator {self.kind} needs a parameter r")
            object.__setattr__(self, "parameter", as_rational(self.parameter))

    @property
    def name(self) -> str:
        s = sign_text(self.sign)
        if self.kind == "identity":
            return "id"
        if self.kind == "partial":
            return f"d{s}:{self.axis}"
        if self.kind == "dirac":
            return f"dh{s}"
        if self.kind == "laplacian":
            return "lap"
        if self.kind == "euler":
            return f"euler{s}"
        if self.kind == "gamma":
            return f"gamma{s}"
        if self.kind in ("R", "V", "J"):
            return f"{self.kind}{s}:{format_rational(self.parameter)}"
        if self.kind == "L":
            return f"L{s}:{self.axis},{self.second_axis}"
        if self.kind == "shift":
            return f"shift:{s}{self.axis}"
        return f"{self.kind}{s}"

    @property
    def matched_family(self) -> FamilySign:
        return FamilySign.matched_to(self.sign)

    def apply(self, p: LatticePolynomial) -> LatticePolynomial:
        kind, sign = self.kind, self.sign
        if kind == "identity":
            return p
        if kind == "partial":
            return apply_partial(self.axis, sign, p)
        if kind == "dirac":
            return apply_dirac(sign, p)
        if kind == "laplacian":
            return apply_laplacian(p)
        if kind == "euler":
            return apply_euler(sign, p)
        if kind == "gamma":
            return apply_gamma(sign, p)
        if kind == "A":
            return apply_A(sign, p)
        if kind == "B":
            return apply_B(sign, p)
        if kind == "C":
            return apply_C(sign, p)
        if kind == "R":
            return apply_R(sign, self.parameter, p)
        if kind == "V":
            return apply_V(sign, self.parameter, p)
        if kind == "J":
            return invert_R(sign, self.parameter, p)
        if kind == "L":
            return apply_L(sign, self.axis, self.second_axis, p)
        return apply_shift(self.axis, sign, p)

    def __call__(self, p: LatticePolynomial) -> LatticePolynomial:
        return self.apply(p)

    def then(self, other: Operator) -> "ComposedOperator":
        """Apply ``self`` first and ``other`` second."""
        return ComposedOperator((self, other))


@dataclass(frozen=True)
class ComposedOperator:
    parts: Tuple[Operator, ...]

    @property
    def name(self) -> str:
        return " ; ".join(part.name for part in self.parts)

    def apply(self, p: LatticePolynomial) -> LatticePolynomial:
        for part in self.parts:
            p = part.apply(p)
        return p

    def __call__(self, p: LatticePolynomial) -> LatticePolynomial:
        return self.apply(p)

    def then(self, other: Operator) -> "ComposedOperator":
        return ComposedOperator(self.parts + (other,))


@dataclass(frozen=True)
class FunctionOperator:
    """Wraps a plain function so it can be assembled into a matrix."""
    name: str
    function: Callable[[LatticePolynomial], LatticePolynomial]

    def apply(self, p: LatticePolynomial) -> LatticePolynomial:
        return self.function(p)

    def __call__(self, p: LatticePolynomial) -> LatticePolynomial:
        return self.function(p)


_SIGNED_SIMPLE = re.compile(r"^(dh|euler|gamma|A|B|C)([+-])$")
_PARTIAL = re.compile(r"^d([+-]):(\d+)$")
_PARAMETRIC = re.compile(r"^([RVJ])([+-]):([+-]?\d+(?:/\d+)?)$")
_ROTATION = re.compile(r"^L([+-]):(\d+),(\d+)$")
_SHIFT = re.compile(r"^shift:([+-])(\d+)$")

_SIMPLE_KINDS = {"dh": "dirac", "euler": "euler", "gamma": "gamma", "A": "A", "B": "B", "C": "C"}


def parse_operator_name(text: str) -> DifferenceOperator:
    """Parse CLI operator names such as ``dh+``, ``R+:3/2``, ``L-:1,2`` or ``shift:+1``."""
    name = text.strip()
    if name == "lap":
        return DifferenceOperator("laplacian")
    if name == "id":
        return DifferenceOperator("identity")
    match = _SIGNED_SIMPLE.match(name)
    if match:
        return DifferenceOperator(_SIMPLE_KINDS[match.group(1)], as_sign(match.group(2)))
    match = _PARTIAL.match(name)
    if match:
        return DifferenceOperator("partial", as_sign(match.group(1)), axis=int(match.group(2)))
    match = _PARAMETRIC.match(name)
    if match:
        return DifferenceOperator(
            match.group(1), as_sign(match.group(2)), parameter=as_rational(match.group(3))
        )
    match = _ROTATION.match(name)
    if match:
        j, k = int(match.group(2)), int(match.group(3))
        if j == k:
            raise RejectedInputError(f"rotation operator needs two distinct axes, got '{name}'")
        return DifferenceOperator("L", as_sign(match.group(1)), axis=j, second_axis=k)
    match = _SHIFT.match(name)
    if match:
        return DifferenceOperator("shift", as_sign(match.group(1)), axis=int(match.group(2)))
    raise RejectedInputError(f"unknown operator name '{text}'")


def check_operator_axes(operator: DifferenceOperator, n: int) -> None:
    for axis in (operator.axis, operator.second_axis):
        if axis and axis > n:
            raise RejectedInputError(f"axis {axis} exceeds dimension {n}")


# Matrices

@dataclass(frozen=True)
class OperatorMatrix:
    """Exact matrix of an operator; rows index target coordinates."""
    operator: str
    source: Basis
    target: Basis
    entries: Tuple[Tuple[Fraction, ...], ...]

    @property
    def shape(self) -> Tuple[int, int]:
        return (self.target.size, self.source.size)

    def rank(self) -> int:
        return linalg.rank(self.entries, self.source.size)

    def nullity(self) -> int:
        return self.source.size - self.rank()

    def nullspace(self) -> List[List[Fraction]]:
        return linalg.nullspace(self.entries, self.source.size)

    def kernel_polynomials(self) -> List[LatticePolynomial]:
        return [self.source.from_coordinates(v) for v in self.nullspace()]

    def apply_to(self, p: LatticePolynomial) -> LatticePolynomial:
        image = linalg.matmul_vector(self.entries, self.source.coordinates(p))
        return self.target.from_coordinates(image)


def assemble_matrix(operator: Operator, source: Basis, target: Basis) -> OperatorMatrix:
    """Matrix of ``operator`` from ``source`` into ``target``.

    Raises ClosureError naming the first basis element whose image has terms
    outside the target span.
    """
    columns = []
    for index in range(source.size):
        element = source.element(index)
        image = operator.apply(element)
        stray = target.stray_terms(image)
        if stray:
            raise ClosureError(operator.name, source.element_label(index), stray)
        columns.append(target.coordinates(image))
    entries = tuple(
        tuple(column[row] for column in columns) for row in range(target.size)
    )
    logger.debug(f"assembled {operator.name}: {target.size}x{source.size}")
    return OperatorMatrix(operator.name, source, target, entries)
