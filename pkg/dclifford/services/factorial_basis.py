"""Shifts, homogeneous powers and limit behaviour of the factorial basis."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from dclifford.core.config import settings
from dclifford.core.exceptions import RejectedInputError
from dclifford.services.exact_algebra import (
    CliffordElement,
    MultiIndex,
    RationalLike,
    as_rational,
    index_factorial,
    multi_indices,
    positive_mesh,
    unit_index,
)
from dclifford.services.factorial_powers import FamilySign, factorial_power_eval
from dclifford.services.lattice_polynomial import LatticePolynomial


def shift(p: LatticePolynomial, axis: int, direction: int) -> LatticePolynomial:
    """The polynomial ``x -> p(x + direction * h e_axis)``.

    Along the matched direction this is ``p + sigma h dp``; the opposite
    translation is the terminating series ``sum_j (-sigma h)^j d^j p``, where
    ``d`` is the difference acting diagonally on ``p.family``.
    """
    if direction not in (1, -1):
        raise RejectedInputError(f"shift direction must be +1 or -1, got {direction}")
    sigma = p.family.operator_sign
    if direction == sigma:
        return p + p.matched_difference(axis).scale(sigma * p.h)
    factor = -sigma * p.h
    result = p
    term = p
    power = Fraction(1)
    while True:
        term = term.matched_difference(axis)
        if term.is_zero():
            return result
        power *= factor
        result = result + term.scale(power)


def shift_by_monomials(p: LatticePolynomial, axis: int, direction: int) -> LatticePolynomial:
    """Same translation computed through the monomial basis and the binomial theorem."""
    step = direction * p.h
    i = axis - 1
    out: Dict[MultiIndex, CliffordElement] = {}
    for beta, coeff in p.to_monomials().items():
        b = beta[i]
        for j in range(b + 1):
            gamma = tuple(j if pos == i else v for pos, v in enumerate(beta))
            piece = coeff.scale(math.comb(b, j) * step ** (b - j))
            out[gamma] = out[gamma] + piece if gamma in out else piece
    return LatticePolynomial.from_monomials(p.n, p.h, p.family, out)


def homogeneous_power(s: int, n: int, family: FamilySign, h: RationalLike) -> LatticePolynomial:
    """The discrete homogeneous power ``H_s``.

    Even degree ``2k``: ``sum_{|a|=k} (-1)^k k!/a! (mh)^{(2a)}``. Odd degree
    ``2k+1``: the same coefficients on ``(mh)^{(2a + e_i)} e_i``.
    """
    if not isinstance(s, int) or s < 0:
        raise RejectedInputError(f"degree must be a non-negative integer, got {s}")
    family = FamilySign.parse(family)
    k, odd = divmod(s, 2)
    terms: Dict[MultiIndex, CliffordElement] = {}
    for alpha in multi_indices(n, k):
        weight = Fraction((-1) ** k * math.factorial(k), index_factorial(alpha))
        doubled = tuple(2 * a for a in alpha)
        if not odd:
            terms[doubled] = CliffordElement.scalar(n, weight)
            continue
        for axis in range(1, n + 1):
            target = tuple(d + u for d, u in zip(doubled, unit_index(n, axis)))
            piece = CliffordElement.basis(n, axis).scale(weight)
            terms[target] = terms[target] + piece if target in terms else piece
    return LatticePolynomial(n, h, family, terms)


def squared_norm_polynomial(n: int, h: RationalLike, family: FamilySign) -> LatticePolynomial:
    """``|mh|^2 = sum_i (m_i h)^2`` in the factorial basis."""
    monomials = {
        tuple(2 * u for u in unit_index(n, axis)): CliffordElement.scalar(n)
        for axis in range(1, n + 1)
    }
    return LatticePolynomial.from_monomials(n, h, family, monomials)


def factorial_recurrence_holds(s: int, family: FamilySign, h: RationalLike, x: RationalLike) -> bool:
    """``(x)^{(s+1)} = (x + offset s h) (x)^{(s)}`` at one point."""
    mesh = positive_mesh(h)
    point = as_rational(x)
    lhs = factorial_power_eval(s + 1, family, mesh, point)
    rhs = (point + family.offset * s * mesh) * factorial_power_eval(s, family, mesh, point)
    return lhs == rhs


@dataclass(frozen=True)
class LimitCheck:
    """Deviation of a factorial power from the classical power under mesh refinement.

    ``deviations[j]`` belongs to ``h = 2^-(j+1)``; ``ratios[j]`` compares
    levels ``j`` and ``j + 1``.
    """
    alpha: MultiIndex
    family: FamilySign
    point: Tuple[Fraction, ...]
    meshes: Tuple[Fraction, ...]
    deviations: Tuple[Fraction, ...]
    ratios: Tuple[Optional[Fraction], ...]

    @property
    def exact(self) -> bool:
        return all(d == 0 for d in self.deviations)

    def window(self, start_level: int) -> Tuple[Optional[Fraction], ...]:
        """Ratios between consecutive meshes ``h <= 2^-start_level``."""
        return self.ratios[start_level - 1:]

    def contracts_within(self, low: Fraction, high: Fraction, start_level: int) -> bool:
        if self.exact:
            return True
        window = self.window(start_level)
        return bool(window) and all(r is not None and low <= r <= high for r in window)


def limit_check(
    alpha: Sequence[int],
    family: FamilySign,
    point: Optional[Sequence[RationalLike]] = None,
    levels: Optional[int] = None,
) -> LimitCheck:
    """Exact deviations ``|(mh)^{(alpha)} - x^alpha|`` for ``h = 2^-1 ... 2^-levels``."""
    family = FamilySign.parse(family)
    alpha = tuple(alpha)
    levels = levels or settings.limit_levels
    coords = tuple(as_rational(x) for x in (point or [1] * len(alpha)))
    classical = Fraction(1)
    for a, x in zip(alpha, coords):
        classical *= x ** a
    meshes, deviations = [], []
    for level in range(1, levels + 1):
        mesh = Fraction(1, 2 ** level)
        value = Fraction(1)
        for a, x in zip(alpha, coords):
            value *= factorial_power_eval(a, family, mesh, x)
        meshes.append(mesh)
        deviations.append(abs(value - classical))
    ratios: List[Optional[Fraction]] = []
    for coarse, fine in zip(deviations, deviations[1:]):
        ratios.append(coarse / fine if fine else None)
    return LimitCheck(alpha, family, coords, tuple(meshes), tuple(deviations), tuple(ratios))
