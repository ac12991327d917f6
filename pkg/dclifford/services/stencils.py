"""Pointwise stencil oracle.

Operators here act on lattice functions through their defining stencils only
(values at neighbouring lattice points), never through the factorial basis.
They are an independent reference for the algebraic operators.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Callable, Dict, Iterator, Optional, Sequence, Tuple

from dclifford.core.config import settings
from dclifford.core.exceptions import RejectedInputError
from dclifford.services.exact_algebra import (
    CliffordElement,
    RationalLike,
    as_rational,
    positive_mesh,
)
from dclifford.services.lattice_polynomial import LatticePolynomial, evaluate

Point = Tuple[Fraction, ...]


class LatticeFunction:
    """A Clifford-valued function on ``hZ^n`` with memoized values."""

    def __init__(self, n: int, h: RationalLike, function: Callable[[Point], CliffordElement], name: str = "f"):
        self.n = n
        self.h = positive_mesh(h)
        self.name = name
        self._function = function
        self._values: Dict[Point, CliffordElement] = {}

    @classmethod
    def from_polynomial(cls, p: LatticePolynomial) -> "LatticeFunction":
        return cls(p.n, p.h, lambda x: evaluate(p, x), name=str(p))

    def __call__(self, point: Sequence[RationalLike]) -> CliffordElement:
        key = tuple(as_rational(x) for x in point)
        value = self._values.get(key)
        if value is None:
            value = self._function(key)
            self._values[key] = value
        return value

    def derive(self, name: str, function: Callable[[Point], CliffordElement]) -> "LatticeFunction":
        return LatticeFunction(self.n, self.h, function, name=name)

    def moved(self, point: Point, axis: int, steps: int) -> Point:
        return tuple(x + steps * self.h if i == axis - 1 else x for i, x in enumerate(point))


def _zero(f: LatticeFunction) -> CliffordElement:
    return CliffordElement.zero(f.n)


def partial(f: LatticeFunction, axis: int, sign: int) -> LatticeFunction:
    """Forward ``(f(x + h e_i) - f(x)) / h`` or backward ``(f(x) - f(x - h e_i)) / h``."""
    h = f.h

    def value(x: Point) -> CliffordElement:
        if sign > 0:
            return (f(f.moved(x, axis, 1)) - f(x)).scale(1 / h)
        return (f(x) - f(f.moved(x, axis, -1))).scale(1 / h)

    return f.derive(f"d{'+' if sign > 0 else '-'}{axis}({f.name})", value)


def shifted(f: LatticeFunction, axis: int, direction: int) -> LatticeFunction:
    return f.derive(f"shift{direction}{axis}({f.name})", lambda x: f(f.moved(x, axis, direction)))


def dirac(f: LatticeFunction, sign: int) -> LatticeFunction:
    parts = [(CliffordElement.basis(f.n, i), partial(f, i, sign)) for i in range(1, f.n + 1)]

    def value(x: Point) -> CliffordElement:
        total = _zero(f)
        for unit, d in parts:
            total = total + unit * d(x)
        return total

    return f.derive(f"D({f.name})", value)


def laplacian(f: LatticeFunction, order: str = "-+") -> LatticeFunction:
    """Second differences ``sum_i d^{-i} d^{+i}`` (``order="-+"``) or ``d^{+i} d^{-i}``."""
    outer, inner = (-1, 1) if order == "-+" else (1, -1)
    parts = [partial(partial(f, i, inner), i, outer) for i in range(1, f.n + 1)]

    def value(x: Point) -> CliffordElement:
        total = _zero(f)
        for d in parts:
            total = total + d(x)
        return total

    return f.derive(f"lap({f.name})", value)


def second_difference(f: LatticeFunction, axis: int) -> LatticeFunction:
    """``(f(x + h e_i) - 2 f(x) + f(x - h e_i)) / h^2``."""
    h = f.h

    def value(x: Point) -> CliffordElement:
        return (f(f.moved(x, axis, 1)) - f(x).scale(2) + f(f.moved(x, axis, -1))).scale(1 / (h * h))

    return f.derive(f"dd{axis}({f.name})", value)


def euler(f: LatticeFunction, sign: int) -> LatticeFunction:
    parts = [shifted(partial(f, i, sign), i, -sign) for i in range(1, f.n + 1)]

    def value(x: Point) -> CliffordElement:
        total = _zero(f)
        for i, d in enumerate(parts):
            total = total + d(x).scale(x[i])
        return total

    return f.derive(f"E({f.name})", value)


def operator_A(f: LatticeFunction, sign: int) -> LatticeFunction:
    parts = [second_difference(f, i) for i in range(1, f.n + 1)]

    def value(x: Point) -> CliffordElement:
        total = _zero(f)
        for i, d in enumerate(parts):
            total = total + d(x).scale(x[i])
        return total.scale(-sign * f.h)

    return f.derive(f"A({f.name})", value)


def operator_B(f: LatticeFunction, sign: int) -> LatticeFunction:
    parts = [partial(f, i, sign) for i in range(1, f.n + 1)]

    def value(x: Point) -> CliffordElement:
        total = _zero(f)
        for d in parts:
            total = total + d(x)
        return total.scale(sign * f.h)

    return f.derive(f"B({f.name})", value)


def operator_C(f: LatticeFunction, sign: int) -> LatticeFunction:
    units = [CliffordElement.basis(f.n, i) for i in range(1, f.n + 1)]

    def value(x: Point) -> CliffordElement:
        total = _zero(f)
        for i, unit in enumerate(units, start=1):
            total = total + (unit * f(f.moved(x, i, -sign))).scale(x[i - 1])
        return total

    return f.derive(f"C({f.name})", value)


def rotation(f: LatticeFunction, sign: int, j: int, k: int) -> LatticeFunction:
    dj, dk = partial(f, j, sign), partial(f, k, sign)
    return f.derive(
        f"L{j}{k}({f.name})",
        lambda x: dk(x).scale(x[j - 1]) - dj(x).scale(x[k - 1]),
    )


def gamma(f: LatticeFunction, sign: int) -> LatticeFunction:
    pieces = []
    for j in range(1, f.n + 1):
        for k in range(j + 1, f.n + 1):
            pieces.append((CliffordElement.basis(f.n, j, k), rotation(f, sign, j, k)))
    a = operator_A(f, sign)

    def value(x: Point) -> CliffordElement:
        total = _zero(f)
        for bivector, rot in pieces:
            total = total - bivector * rot(x)
        return total - a(x)

    return f.derive(f"Gamma({f.name})", value)


def vector_variable(f: LatticeFunction) -> LatticeFunction:
    """``x -> (sum_i x_i e_i) f(x)``."""
    units = [CliffordElement.basis(f.n, i) for i in range(1, f.n + 1)]

    def value(x: Point) -> CliffordElement:
        total = _zero(f)
        for unit, xi in zip(units, x):
            total = total + (unit * f(x)).scale(xi)
        return total

    return f.derive(f"x({f.name})", value)


def apply_stencil(kind: str, f: LatticeFunction, sign: int = 1, axis: int = 0,
                  second_axis: int = 0, parameter: Optional[Fraction] = None) -> LatticeFunction:
    """Stencil counterpart of a ``DifferenceOperator`` description."""
    if kind == "identity":
        return f
    if kind == "partial":
        return partial(f, axis, sign)
    if kind == "dirac":
        return dirac(f, sign)
    if kind == "laplacian":
        return laplacian(f)
    if kind == "euler":
        return euler(f, sign)
    if kind == "gamma":
        return gamma(f, sign)
    if kind == "A":
        return operator_A(f, sign)
    if kind == "B":
        return operator_B(f, sign)
    if kind == "C":
        return operator_C(f, sign)
    if kind == "L":
        return rotation(f, sign, axis, second_axis)
    if kind == "shift":
        return shifted(f, axis, sign)
    if kind in ("R", "V"):
        e, a = euler(f, sign), operator_A(f, sign)
        b = operator_B(f, sign) if kind == "V" else None
        r = as_rational(parameter)

        def value(x: Point) -> CliffordElement:
            total = f(x).scale(r) + e(x) - a(x)
            return total + b(x).scale(Fraction(1, 2)) if b is not None else total

        return f.derive(f"{kind}({f.name})", value)
    raise RejectedInputError(f"operator kind '{kind}' has no pointwise stencil")


def lattice_points(n: int, h: RationalLike, radius: Optional[int] = None) -> Iterator[Point]:
    """Points ``m h`` with ``|m_i| <= radius``, in lexicographic order of ``m``."""
    mesh = positive_mesh(h)
    radius = settings.oracle_radius if radius is None else radius
    steps = range(-radius, radius + 1)
    for m in itertools.product(steps, repeat=n):
        yield tuple(mi * mesh for mi in m)


def first_disagreement(
    expected: LatticePolynomial,
    reference: LatticeFunction,
    radius: Optional[int] = None,
) -> Optional[Tuple[Point, CliffordElement, CliffordElement]]:
    """First lattice point where a polynomial and a stencil value differ."""
    for point in lattice_points(expected.n, expected.h, radius):
        lhs, rhs = evaluate(expected, point), reference(point)
        if lhs != rhs:
            return point, lhs, rhs
    return None
