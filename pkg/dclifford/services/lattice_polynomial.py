"""Clifford-valued polynomials over a factorial-power basis."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from dclifford.core.exceptions import RejectedInputError
from dclifford.services.exact_algebra import (
    CliffordElement,
    MultiIndex,
    RationalLike,
    add_indices,
    all_blades,
    as_rational,
    blade_label,
    format_rational,
    index_degree,
    join_signed_terms,
    multi_indices,
    positive_mesh,
    unit_index,
    validate_multi_index,
)
from dclifford.services.factorial_powers import (
    FamilySign,
    factorial_power_eval,
    factorial_to_monomial,
    monomial_to_factorial,
)


class LatticePolynomial:
    """Sparse mapping ``alpha -> CliffordElement`` over ``(mh)^{(alpha)}``.

    ``n``, ``h`` and ``family`` are part of the value. Zero coefficients are
    never stored. Instances are treated as immutable.
    """

    __slots__ = ("n", "h", "family", "_terms", "_hash")

    def __init__(
        self,
        n: int,
        h: RationalLike,
        family: FamilySign,
        terms: Optional[Mapping[Sequence[int], CliffordElement]] = None,
    ):
        if not isinstance(n, int) or n < 1:
            raise RejectedInputError(f"dimension must be a positive integer, got {n}")
        self.n = n
        self.h = positive_mesh(h)
        self.family = FamilySign.parse(family)
        store: Dict[MultiIndex, CliffordElement] = {}
        for alpha, coeff in (terms or {}).items():
            key = validate_multi_index(tuple(alpha), n)
            if coeff.dimension != n:
                raise RejectedInputError(
                    f"coefficient dimension {coeff.dimension} does not match n={n}"
                )
            if key in store:
                coeff = store[key] + coeff
            if coeff.is_zero():
                store.pop(key, None)
            else:
                store[key] = coeff
        self._terms = store
        self._hash = None

    # Constructors

    @classmethod
    def zero(cls, n: int, h: RationalLike, family: FamilySign) -> "LatticePolynomial":
        return cls(n, h, family)

    @classmethod
    def constant(cls, n: int, h: RationalLike, family: FamilySign, element: CliffordElement) -> "LatticePolynomial":
        return cls(n, h, family, {(0,) * n: element})

    @classmethod
    def monomial(
        cls,
        n: int,
        h: RationalLike,
        family: FamilySign,
        alpha: Sequence[int],
        element: Optional[CliffordElement] = None,
    ) -> "LatticePolynomial":
        if element is None:
            element = CliffordElement.scalar(n)
        return cls(n, h, family, {tuple(alpha): element})

    def like(self, terms: Optional[Mapping[MultiIndex, CliffordElement]] = None) -> "LatticePolynomial":
        """New polynomial in the same ``(n, h, family)`` context."""
        return LatticePolynomial(self.n, self.h, self.family, terms)

    # Queries

    @property
    def context(self) -> Tuple[int, Fraction, FamilySign]:
        return (self.n, self.h, self.family)

    @property
    def terms(self) -> Mapping[MultiIndex, CliffordElement]:
        return MappingProxyType(self._terms)

    def items(self) -> List[Tuple[MultiIndex, CliffordElement]]:
        return sorted(self._terms.items())

    def coefficient(self, alpha: Sequence[int]) -> CliffordElement:
        return self._terms.get(tuple(alpha), CliffordElement.zero(self.n))

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Largest ``|alpha|``; ``-1`` for the zero polynomial."""
        return max((index_degree(a) for a in self._terms), default=-1)

    def degrees(self) -> List[int]:
        return sorted({index_degree(a) for a in self._terms})

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def blades(self) -> List[int]:
        return sorted({b for coeff in self._terms.values() for b in coeff.coeffs})

    # Arithmetic

    def _check(self, other: "LatticePolynomial") -> None:
        if not isinstance(other, LatticePolynomial):
            raise RejectedInputError(f"expected a lattice polynomial, got {type(other).__name__}")
        if other.n != self.n:
            raise RejectedInputError(f"mismatched dimension: {self.n} vs {other.n}")
        if other.h != self.h:
            raise RejectedInputError(
                f"mismatched mesh width: {format_rational(self.h)} vs {format_rational(other.h)}"
            )
        if other.family is not self.family:
            raise RejectedInputError(
                f"mismatched family: {self.family.value} vs {other.family.value}"
            )

    def __add__(self, other: "LatticePolynomial") -> "LatticePolynomial":
        self._check(other)
        out = dict(self._terms)
        for alpha, coeff in other._terms.items():
            out[alpha] = out[alpha] + coeff if alpha in out else coeff
        return self.like(out)

    def __neg__(self) -> "LatticePolynomial":
        return self.like({a: -c for a, c in self._terms.items()})

    def __sub__(self, other: "LatticePolynomial") -> "LatticePolynomial":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "LatticePolynomial":
        q = as_rational(factor)
        return self.like({a: c.scale(q) for a, c in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def left_multiply(self, element: CliffordElement) -> "LatticePolynomial":
        return self.like({a: element * c for a, c in self._terms.items()})

    def right_multiply(self, element: CliffordElement) -> "LatticePolynomial":
        return self.like({a: c * element for a, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, LatticePolynomial):
            return NotImplemented
        return self.context == other.context and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.context, frozenset(self._terms.items())))
        return self._hash

    # Grading

    def graded_component(self, k: int) -> "LatticePolynomial":
        return self.like({a: c for a, c in self._terms.items() if index_degree(a) == k})

    def graded_components(self) -> Dict[int, "LatticePolynomial"]:
        return {k: self.graded_component(k) for k in self.degrees()}

    # Coordinate calculus

    def multiply_by_coordinate(self, axis: int) -> "LatticePolynomial":
        """Exact product with the coordinate ``m_axis h``.

        Uses ``x (x)^{(s)} = (x)^{(s+1)} - offset * s h (x)^{(s)}``.
        """
        self._check_axis(axis)
        i = axis - 1
        lower = -self.family.offset * self.h
        out: Dict[MultiIndex, CliffordElement] = {}
        for alpha, coeff in self._terms.items():
            raised = add_indices(alpha, unit_index(self.n, axis))
            out[raised] = out[raised] + coeff if raised in out else coeff
            if alpha[i]:
                extra = coeff.scale(lower * alpha[i])
                out[alpha] = out[alpha] + extra if alpha in out else extra
        return self.like(out)

    def multiply_by_vector_variable(self, units: Optional[Sequence[CliffordElement]] = None) -> "LatticePolynomial":
        """``(sum_i m_i h u_i) p`` with ``u_i = e_i`` unless other units are given."""
        if units is None:
            units = [CliffordElement.basis(self.n, i) for i in range(1, self.n + 1)]
        if len(units) != self.n:
            raise RejectedInputError("one unit per coordinate is required")
        result = self.like()
        for axis, unit in enumerate(units, start=1):
            result = result + self.left_multiply(unit).multiply_by_coordinate(axis)
        return result

    def matched_difference(self, axis: int) -> "LatticePolynomial":
        """The difference acting diagonally on this family: ``alpha_i (mh)^{(alpha - e_i)}``."""
        self._check_axis(axis)
        i = axis - 1
        out = {}
        for alpha, coeff in self._terms.items():
            if alpha[i]:
                lowered = tuple(a - 1 if j == i else a for j, a in enumerate(alpha))
                out[lowered] = coeff.scale(alpha[i])
        return self.like(out)

    def _check_axis(self, axis: int) -> None:
        if not 1 <= axis <= self.n:
            raise RejectedInputError(f"axis {axis} exceeds dimension {self.n}")

    # Evaluation and basis changes

    def evaluate(self, point: Sequence[RationalLike]) -> CliffordElement:
        return evaluate(self, point)

    def to_monomials(self) -> Dict[MultiIndex, CliffordElement]:
        """Coefficients in the ordinary monomial basis ``x^beta``."""
        out: Dict[MultiIndex, CliffordElement] = {}
        for alpha, coeff in self._terms.items():
            for beta, c in factorial_to_monomial(alpha, self.family, self.h).items():
                piece = coeff.scale(c)
                out[beta] = out[beta] + piece if beta in out else piece
        return {b: c for b, c in out.items() if not c.is_zero()}

    @classmethod
    def from_monomials(
        cls,
        n: int,
        h: RationalLike,
        family: FamilySign,
        monomials: Mapping[MultiIndex, CliffordElement],
    ) -> "LatticePolynomial":
        family = FamilySign.parse(family)
        out: Dict[MultiIndex, CliffordElement] = {}
        for beta, coeff in monomials.items():
            for alpha, c in monomial_to_factorial(tuple(beta), family, h).items():
                piece = coeff.scale(c)
                out[alpha] = out[alpha] + piece if alpha in out else piece
        return cls(n, h, family, out)

    def multiply(self, other: "LatticePolynomial") -> "LatticePolynomial":
        """Polynomial product (coefficients multiply as ``self * other``)."""
        self._check(other)
        left, right = self.to_monomials(), other.to_monomials()
        out: Dict[MultiIndex, CliffordElement] = {}
        for alpha, a in left.items():
            for beta, b in right.items():
                gamma = add_indices(alpha, beta)
                piece = a * b
                out[gamma] = out[gamma] + piece if gamma in out else piece
        return LatticePolynomial.from_monomials(self.n, self.h, self.family, out)

    def dilate(self, factor: RationalLike) -> "LatticePolynomial":
        """The polynomial ``x -> p(factor * x)``."""
        tau = as_rational(factor)
        scaled = {
            beta: coeff.scale(tau ** index_degree(beta))
            for beta, coeff in self.to_monomials().items()
        }
        return LatticePolynomial.from_monomials(self.n, self.h, self.family, scaled)

    def with_family(self, family: FamilySign) -> "LatticePolynomial":
        """Re-express the same function over the other factorial family."""
        family = FamilySign.parse(family)
        if family is self.family:
            return self
        return LatticePolynomial.from_monomials(self.n, self.h, family, self.to_monomials())

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return (
            f"LatticePolynomial(n={self.n}, h={format_rational(self.h)}, "
            f"family={self.family.value}, {format_polynomial(self)!r})"
        )


def evaluate(p: LatticePolynomial, point: Sequence[RationalLike]) -> CliffordElement:
    if len(point) != p.n:
        raise RejectedInputError(f"point has {len(point)} coordinates, expected {p.n}")
    coords = [as_rational(x) for x in point]
    total = CliffordElement.zero(p.n)
    for alpha, coeff in p.items():
        weight = Fraction(1)
        for s, x in zip(alpha, coords):
            weight *= factorial_power_eval(s, p.family, p.h, x)
            if not weight:
                break
        if weight:
            total = total + coeff.scale(weight)
    return total


def format_monomial(alpha: MultiIndex) -> str:
    return " ".join(f"X{i}^({s})" for i, s in enumerate(alpha, start=1) if s)


def term_label(alpha: MultiIndex, blade: int) -> str:
    monomial = format_monomial(alpha)
    label = f"e{blade_label(blade)}"
    return f"{monomial} {label}" if monomial else label


def format_polynomial(p: LatticePolynomial) -> str:
    """Canonical text: terms by multi-index then blade, e.g. ``1/2 X1^(1) e0 - X2^(1) e12``."""
    pieces = []
    for alpha, coeff in p.items():
        for blade, value in coeff.items():
            pieces.append((value, term_label(alpha, blade)))
    if not pieces:
        return "0"
    return join_signed_terms(pieces)


@dataclass(frozen=True)
class GradedComponentBasis:
    """Coordinates of the homogeneous space of one degree.

    Elements are ``(alpha, blade)`` pairs ordered by ``alpha`` (lex) then blade.
    ``blades`` restricts the Clifford part (all ``2^n`` blades by default).
    """
    n: int
    h: Fraction
    family: FamilySign
    degree: int
    blades: Tuple[int, ...] = ()
    elements: Tuple[Tuple[MultiIndex, int], ...] = field(init=False, repr=False, compare=False)
    _positions: Dict[Tuple[MultiIndex, int], int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "h", positive_mesh(self.h))
        object.__setattr__(self, "family", FamilySign.parse(self.family))
        if not self.blades:
            object.__setattr__(self, "blades", all_blades(self.n))
        elements = tuple(
            (alpha, blade) for alpha in multi_indices(self.n, self.degree) for blade in self.blades
        )
        object.__setattr__(self, "elements", elements)
        object.__setattr__(self, "_positions", {e: i for i, e in enumerate(elements)})

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return (self.degree,) if self.degree >= 0 else ()

    def expected_size(self) -> int:
        if self.degree < 0:
            return 0
        return math.comb(self.degree + self.n - 1, self.n - 1) * len(self.blades)

    def element(self, index: int) -> LatticePolynomial:
        alpha, blade = self.elements[index]
        return LatticePolynomial(
            self.n, self.h, self.family, {alpha: CliffordElement(self.n, {blade: 1})}
        )

    def element_label(self, index: int) -> str:
        return format_polynomial(self.element(index))

    def stray_terms(self, p: LatticePolynomial) -> List[str]:
        """Text of the terms of ``p`` that lie outside this span."""
        stray = []
        for alpha, coeff in p.items():
            for blade, value in coeff.items():
                if (alpha, blade) not in self._positions:
                    stray.append(f"{format_rational(value)} {term_label(alpha, blade)}")
        return stray

    def coordinates(self, p: LatticePolynomial) -> List[Fraction]:
        if p.context != (self.n, self.h, self.family):
            raise RejectedInputError("polynomial context does not match the basis")
        stray = self.stray_terms(p)
        if stray:
            raise RejectedInputError(
                f"coordinates expects degree {self.degree} terms over the basis blades; got {', '.join(stray)}"
            )
        vector = [Fraction(0)] * self.size
        for alpha, coeff in p.items():
            for blade, value in coeff.items():
                vector[self._positions[(alpha, blade)]] = value
        return vector

    def from_coordinates(self, vector: Sequence[RationalLike]) -> LatticePolynomial:
        if len(vector) != self.size:
            raise RejectedInputError(f"expected {self.size} coordinates, got {len(vector)}")
        grouped: Dict[MultiIndex, Dict[int, Fraction]] = {}
        for (alpha, blade), value in zip(self.elements, vector):
            q = as_rational(value)
            if q:
                grouped.setdefault(alpha, {})[blade] = q
        return LatticePolynomial(
            self.n, self.h, self.family,
            {alpha: CliffordElement(self.n, coeffs) for alpha, coeffs in grouped.items()},
        )


class DirectSumBasis:
    """Concatenated coordinates over several degrees."""

    def __init__(self, parts: Iterable[GradedComponentBasis]):
        self.parts = tuple(parts)
        contexts = {(p.n, p.h, p.family) for p in self.parts}
        if len(contexts) > 1:
            raise RejectedInputError("direct sum parts must share a context")
        self.elements = tuple(e for part in self.parts for e in part.elements)
        self._positions = {e: i for i, e in enumerate(self.elements)}

    @classmethod
    def up_to(
        cls,
        n: int,
        h: RationalLike,
        family: FamilySign,
        max_degree: int,
        blades: Tuple[int, ...] = (),
    ) -> "DirectSumBasis":
        return cls(
            GradedComponentBasis(n, h, family, k, blades) for k in range(max_degree + 1)
        )

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def degrees(self) -> Tuple[int, ...]:
        return tuple(p.degree for p in self.parts)

    def element(self, index: int) -> LatticePolynomial:
        for part in self.parts:
            if index < part.size:
                return part.element(index)
            index -= part.size
        raise IndexError(index)

    def element_label(self, index: int) -> str:
        return format_polynomial(self.element(index))

    def stray_terms(self, p: LatticePolynomial) -> List[str]:
        stray = []
        for alpha, coeff in p.items():
            for blade, value in coeff.items():
                if (alpha, blade) not in self._positions:
                    stray.append(f"{format_rational(value)} {term_label(alpha, blade)}")
        return stray

    def coordinates(self, p: LatticePolynomial) -> List[Fraction]:
        stray = self.stray_terms(p)
        if stray:
            raise RejectedInputError(f"terms outside the direct sum: {', '.join(stray)}")
        vector = [Fraction(0)] * self.size
        for alpha, coeff in p.items():
            for blade, value in coeff.items():
                vector[self._positions[(alpha, blade)]] = value
        return vector

    def from_coordinates(self, vector: Sequence[RationalLike]) -> LatticePolynomial:
        if not self.parts:
            raise RejectedInputError("empty direct sum has no context")
        result = None
        offset = 0
        for part in self.parts:
            piece = part.from_coordinates(vector[offset:offset + part.size])
            result = piece if result is None else result + piece
            offset += part.size
        return result
