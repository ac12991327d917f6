"""Exact scalars, multi-indices and the Clifford algebra Cl(0,n).

Blades are stored as integer bitmasks: bit ``i - 1`` set means the generator
``e_i`` occurs in the (increasingly ordered) product. Mask ``0`` is ``e_0``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from dclifford.core.exceptions import RejectedInputError

Rational = Fraction
RationalLike = Union[int, str, Fraction]
MultiIndex = Tuple[int, ...]

_RATIONAL_RE = re.compile(r"[+-]?\d+(/\d+)?")


def as_rational(value: RationalLike) -> Fraction:
    """Coerce ``value`` to an exact Fraction, rejecting floats and malformed text."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise RejectedInputError(f"invalid rational {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_RE.fullmatch(text):
            raise RejectedInputError(f"invalid rational '{value}'")
        try:
            return Fraction(text)
        except ZeroDivisionError:
            raise RejectedInputError(f"zero denominator in '{value}'")
    raise RejectedInputError(f"invalid rational {value!r}")


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def positive_mesh(h: RationalLike) -> Fraction:
    mesh = as_rational(h)
    if mesh <= 0:
        raise RejectedInputError(f"mesh width must be positive, got {format_rational(mesh)}")
    return mesh


# Multi-indices

def index_degree(alpha: MultiIndex) -> int:
    return sum(alpha)


def index_factorial(alpha: MultiIndex) -> int:
    return math.prod(math.factorial(a) for a in alpha)


def unit_index(n: int, axis: int) -> MultiIndex:
    """The multi-index ``e_axis`` for a 1-based axis."""
    return tuple(1 if i == axis - 1 else 0 for i in range(n))


def add_indices(alpha: MultiIndex, beta: MultiIndex) -> MultiIndex:
    return tuple(a + b for a, b in zip(alpha, beta))


def multi_indices(n: int, degree: int) -> List[MultiIndex]:
    """All multi-indices of length ``n`` and given degree, lexicographically ascending."""
    if degree < 0:
        return []
    if n == 0:
        return [()] if degree == 0 else []
    result = []
    for first in range(degree + 1):
        for rest in multi_indices(n - 1, degree - first):
            result.append((first,) + rest)
    return result


def validate_multi_index(alpha: Sequence[int], n: int) -> MultiIndex:
    if len(alpha) != n:
        raise RejectedInputError(f"multi-index {tuple(alpha)} has length {len(alpha)}, expected {n}")
    if any((not isinstance(a, int)) or a < 0 for a in alpha):
        raise RejectedInputError(f"multi-index {tuple(alpha)} must have non-negative integer entries")
    return tuple(alpha)


# Blades

def blade_grade(blade: int) -> int:
    return bin(blade).count("1")


def blade_indices(blade: int) -> Tuple[int, ...]:
    return tuple(i + 1 for i in range(blade.bit_length()) if blade >> i & 1)


def blade_label(blade: int) -> str:
    """Text label: ``"0"`` for the scalar blade, otherwise the sorted digits."""
    if blade == 0:
        return "0"
    return "".join(str(i) for i in blade_indices(blade))


def blade_from_label(label: str, n: int) -> int:
    if label == "0":
        return 0
    if not label.isdigit():
        raise RejectedInputError(f"blade label '{label}' must be digits")
    blade = 0
    for digit in label:
        axis = int(digit)
        if axis < 1 or axis > n:
            raise RejectedInputError(f"blade index {axis} exceeds dimension {n}")
        blade |= 1 << (axis - 1)
    if blade_label(blade) != label:
        raise RejectedInputError(f"blade label '{label}' is not sorted")
    return blade


def blade_product(a: int, b: int) -> Tuple[int, int]:
    """Return ``(sign, blade)`` with ``e_a e_b = sign * e_blade``."""
    swaps = 0
    shifted = a >> 1
    while shifted:
        swaps += bin(shifted & b).count("1")
        shifted >>= 1
    sign = -1 if swaps & 1 else 1
    # e_i e_i = -e_0
    if blade_grade(a & b) & 1:
        sign = -sign
    return sign, a ^ b


def conjugation_sign(blade: int) -> int:
    grade = blade_grade(blade)
    sign = -1 if grade & 1 else 1
    if (grade * (grade - 1) // 2) & 1:
        sign = -sign
    return sign


def ordered_blade(indices: Iterable[int], n: int) -> Tuple[int, int]:
    """Multiply generators ``e_i`` in the given order; repeats are allowed."""
    sign, blade = 1, 0
    for axis in indices:
        if axis < 1 or axis > n:
            raise RejectedInputError(f"blade index {axis} exceeds dimension {n}")
        step, blade = blade_product(blade, 1 << (axis - 1))
        sign *= step
    return sign, blade


class CliffordElement:
    """Element of Cl(0,n) with exact rational coefficients.

    Only nonzero coefficients are stored. Instances are treated as immutable.
    """

    __slots__ = ("dimension", "_coeffs", "_hash")

    def __init__(self, dimension: int, coeffs: Optional[Mapping[int, RationalLike]] = None):
        if dimension < 0:
            raise RejectedInputError(f"negative dimension {dimension}")
        limit = 1 << dimension
        store: Dict[int, Fraction] = {}
        for blade, value in (coeffs or {}).items():
            if not 0 <= blade < limit:
                raise RejectedInputError(
                    f"blade e{blade_label(blade)} exceeds dimension {dimension}"
                )
            q = as_rational(value)
            if q:
                store[blade] = q
        self.dimension = dimension
        self._coeffs = store
        self._hash = None

    @classmethod
    def zero(cls, dimension: int) -> "CliffordElement":
        return cls(dimension)

    @classmethod
    def scalar(cls, dimension: int, value: RationalLike = 1) -> "CliffordElement":
        return cls(dimension, {0: value})

    @classmethod
    def basis(cls, dimension: int, *axes: int) -> "CliffordElement":
        """Product ``e_{axes[0]} e_{axes[1]} ...``; no axes gives ``e_0``."""
        sign, blade = ordered_blade(axes, dimension)
        return cls(dimension, {blade: sign})

    @classmethod
    def vector(cls, dimension: int, components: Sequence[RationalLike]) -> "CliffordElement":
        if len(components) != dimension:
            raise RejectedInputError("vector length does not match dimension")
        return cls(dimension, {1 << i: c for i, c in enumerate(components)})

    @classmethod
    def one_pm(cls, dimension: int, sign: int) -> "CliffordElement":
        """The element ``1^± = ±(e_1 + ... + e_n)``."""
        return cls(dimension, {1 << i: sign for i in range(dimension)})

    @property
    def coeffs(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._coeffs)

    def items(self) -> List[Tuple[int, Fraction]]:
        return sorted(self._coeffs.items())

    def coefficient(self, blade: int) -> Fraction:
        return self._coeffs.get(blade, Fraction(0))

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check(self, other: "CliffordElement") -> None:
        if not isinstance(other, CliffordElement):
            raise RejectedInputError(f"expected a Clifford element, got {type(other).__name__}")
        if other.dimension != self.dimension:
            raise RejectedInputError(f"dimension mismatch: {self.dimension} vs {other.dimension}")

    def __add__(self, other: "CliffordElement") -> "CliffordElement":
        self._check(other)
        out = dict(self._coeffs)
        for blade, value in other._coeffs.items():
            out[blade] = out.get(blade, Fraction(0)) + value
        return CliffordElement(self.dimension, out)

    def __neg__(self) -> "CliffordElement":
        return CliffordElement(self.dimension, {b: -v for b, v in self._coeffs.items()})

    def __sub__(self, other: "CliffordElement") -> "CliffordElement":
        return self + (-other)

    def scale(self, factor: RationalLike) -> "CliffordElement":
        q = as_rational(factor)
        return CliffordElement(self.dimension, {b: v * q for b, v in self._coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            return clifford_product(self, other)
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, CliffordElement):
            return NotImplemented
        return self.dimension == other.dimension and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.dimension, frozenset(self._coeffs.items())))
        return self._hash

    def conjugate(self) -> "CliffordElement":
        return conjugate(self)

    def scalar_part(self) -> Fraction:
        return scalar_part(self)

    def vector_part(self) -> "CliffordElement":
        return vector_part(self)

    def grade_part(self, grade: int) -> "CliffordElement":
        return CliffordElement(
            self.dimension,
            {b: v for b, v in self._coeffs.items() if blade_grade(b) == grade},
        )

    def norm_squared(self) -> Fraction:
        """``Sc(conj(a) a)``, the sum of squared coefficients."""
        return scalar_part(clifford_product(conjugate(self), self))

    def format(self) -> str:
        if not self._coeffs:
            return "0"
        pieces = []
        for blade, value in self.items():
            label = f"e{blade_label(blade)}"
            pieces.append((value, label))
        return join_signed_terms(pieces)

    def __str__(self) -> str:
        return self.format()

    def __repr__(self) -> str:
        return f"CliffordElement({self.dimension}, {self.format()!r})"


def join_signed_terms(pieces: Sequence[Tuple[Fraction, str]]) -> str:
    """Join ``(coefficient, body)`` pairs as ``c body + c body - ...``.

    A unit coefficient is omitted when the body is non-empty.
    """
    parts: List[str] = []
    for position, (value, body) in enumerate(pieces):
        magnitude = abs(value)
        if magnitude == 1 and body:
            text = body
        elif body:
            text = f"{format_rational(magnitude)} {body}"
        else:
            text = format_rational(magnitude)
        if position == 0:
            parts.append(f"-{text}" if value < 0 else text)
        else:
            parts.append(f"{'-' if value < 0 else '+'} {text}")
    return " ".join(parts)


def clifford_product(a: CliffordElement, b: CliffordElement) -> CliffordElement:
    a._check(b)
    out: Dict[int, Fraction] = {}
    for blade_a, value_a in a._coeffs.items():
        for blade_b, value_b in b._coeffs.items():
            sign, blade = blade_product(blade_a, blade_b)
            out[blade] = out.get(blade, Fraction(0)) + sign * value_a * value_b
    return CliffordElement(a.dimension, out)


def conjugate(a: CliffordElement) -> CliffordElement:
    return CliffordElement(
        a.dimension,
        {blade: conjugation_sign(blade) * value for blade, value in a._coeffs.items()},
    )


def scalar_part(a: CliffordElement) -> Fraction:
    return a.coefficient(0)


def vector_part(a: CliffordElement) -> CliffordElement:
    return a.grade_part(1)


# Quaternions as the even subalgebra of Cl(0,3):
#   i = e_2e_3, j = e_3e_1 = -e_1e_3, k = e_1e_2, so that ij = k (Hamilton).
QUATERNION_BLADES: Tuple[int, ...] = (0b000, 0b110, 0b101, 0b011)
QUATERNION_SIGNS: Tuple[int, ...] = (1, 1, -1, 1)


def quaternion_unit(index: int) -> CliffordElement:
    """The Cl(0,3) element representing quaternion unit ``index`` (0 = real)."""
    return CliffordElement(3, {QUATERNION_BLADES[index]: QUATERNION_SIGNS[index]})


def hamilton_left_matrix(a: Sequence[Fraction]) -> Tuple[Tuple[Fraction, ...], ...]:
    """4x4 matrix of left multiplication by the quaternion ``a`` on column vectors."""
    a0, a1, a2, a3 = a
    return (
        (a0, -a1, -a2, -a3),
        (a1, a0, -a3, a2),
        (a2, a3, a0, -a1),
        (a3, -a2, a1, a0),
    )


def printed_variable_matrix(m1: Fraction, m2: Fraction, m3: Fraction) -> Tuple[Tuple[Fraction, ...], ...]:
    """The 4x4 matrix for a pure quaternion variable with the entry pattern as
    commonly printed, where row 3 / column 4 carries ``+m1``."""
    zero = Fraction(0)
    return (
        (zero, -m1, -m2, -m3),
        (m1, zero, -m3, m2),
        (m2, m3, zero, m1),
        (m3, -m2, m1, zero),
    )


@dataclass(frozen=True)
class QuaternionView:
    """Four real components ``(f0, f1, f2, f3)`` of a quaternion."""
    f0: Fraction
    f1: Fraction
    f2: Fraction
    f3: Fraction

    @classmethod
    def from_column(cls, values: Sequence[RationalLike]) -> "QuaternionView":
        if len(values) != 4:
            raise RejectedInputError("a quaternion has four components")
        return cls(*(as_rational(v) for v in values))

    @classmethod
    def from_clifford(cls, element: CliffordElement) -> "QuaternionView":
        if element.dimension != 3:
            raise RejectedInputError("quaternions live in Cl(0,3)")
        stray = set(element.coeffs) - set(QUATERNION_BLADES)
        if stray:
            labels = ", ".join(f"e{blade_label(b)}" for b in sorted(stray))
            raise RejectedInputError(f"odd blades {labels} have no quaternion counterpart")
        return cls(*(
            QUATERNION_SIGNS[i] * element.coefficient(QUATERNION_BLADES[i]) for i in range(4)
        ))

    def as_column(self) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.f0, self.f1, self.f2, self.f3)

    def to_clifford(self) -> CliffordElement:
        return CliffordElement(3, {
            QUATERNION_BLADES[i]: QUATERNION_SIGNS[i] * value
            for i, value in enumerate(self.as_column())
        })

    def left_matrix(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return hamilton_left_matrix(self.as_column())

    def __mul__(self, other: "QuaternionView") -> "QuaternionView":
        a0, a1, a2, a3 = self.as_column()
        b0, b1, b2, b3 = other.as_column()
        return QuaternionView(
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 + a3 * b1 - a1 * b3,
            a0 * b3 + a3 * b0 + a1 * b2 - a2 * b1,
        )

    def matrix_product(self, other: "QuaternionView") -> "QuaternionView":
        """Multiply through the 4x4 left-multiplication matrix."""
        column = other.as_column()
        return QuaternionView(*(
            sum((entry * value for entry, value in zip(row, column)), Fraction(0))
            for row in self.left_matrix()
        ))


def all_blades(n: int) -> Tuple[int, ...]:
    return tuple(range(1 << n))
