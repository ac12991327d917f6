"""Seeded random inputs for property checks."""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Sequence

from dclifford.services.exact_algebra import CliffordElement, all_blades, multi_indices
from dclifford.services.factorial_powers import FamilySign
from dclifford.services.lattice_polynomial import LatticePolynomial


def claim_rng(seed: int, claim_id: str) -> random.Random:
    """Independent stream per claim, so filtering never changes a claim's inputs."""
    return random.Random(f"{seed}:{claim_id}")


def random_rational(rng: random.Random, bound: int = 3) -> Fraction:
    return Fraction(rng.randint(-bound, bound), rng.randint(1, 2))


def random_element(
    rng: random.Random,
    n: int,
    blades: Optional[Sequence[int]] = None,
    density: float = 0.5,
) -> CliffordElement:
    """A nonzero Clifford element with small rational coefficients."""
    pool = tuple(blades) if blades else all_blades(n)
    while True:
        coeffs = {b: random_rational(rng) for b in pool if rng.random() < density}
        element = CliffordElement(n, coeffs)
        if not element.is_zero():
            return element


def random_homogeneous(
    rng: random.Random,
    n: int,
    h: Fraction,
    family: FamilySign,
    degree: int,
    blades: Optional[Sequence[int]] = None,
    terms: int = 3,
) -> LatticePolynomial:
    """A nonzero homogeneous polynomial with at most ``terms`` multi-indices."""
    indices = multi_indices(n, degree)
    chosen = rng.sample(indices, min(terms, len(indices)))
    return LatticePolynomial(
        n, h, family, {alpha: random_element(rng, n, blades) for alpha in chosen}
    )


def random_polynomial(
    rng: random.Random,
    n: int,
    h: Fraction,
    family: FamilySign,
    max_degree: int,
    blades: Optional[Sequence[int]] = None,
) -> LatticePolynomial:
    """A nonzero polynomial with one random homogeneous piece per degree, some skipped."""
    result = LatticePolynomial.zero(n, h, family)
    for degree in range(max_degree + 1):
        if rng.random() < 0.7:
            result = result + random_homogeneous(rng, n, h, family, degree, blades, terms=2)
    if result.is_zero():
        result = random_homogeneous(rng, n, h, family, max_degree, blades)
    return result
