"""One-dimensional factorial powers and Stirling conversions.

``(x)^{(s)}_-`` is ``x (x - h) ... (x - (s-1) h)`` and ``(x)^{(s)}_+`` is
``x (x + h) ... (x + (s-1) h)``. Multi-index conversions multiply the
one-dimensional ones coordinate by coordinate.
"""
from __future__ import annotations

import itertools
import threading
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Tuple

from sympy.functions.combinatorial.numbers import stirling

from dclifford.core.config import settings
from dclifford.core.exceptions import RejectedInputError
from dclifford.services.exact_algebra import MultiIndex, RationalLike, as_rational, positive_mesh


class FamilySign(str, Enum):
    """Selects the factorial family ``(x)^{(s)}_-`` or ``(x)^{(s)}_+``."""
    MINUS = "-"
    PLUS = "+"

    @classmethod
    def parse(cls, value) -> "FamilySign":
        if isinstance(value, FamilySign):
            return value
        try:
            return cls(str(value).strip())
        except ValueError:
            raise RejectedInputError(f"family must be '+' or '-', got '{value}'")

    @property
    def operator_sign(self) -> int:
        """Sign of the difference operator acting diagonally on this family."""
        return 1 if self is FamilySign.MINUS else -1

    @property
    def offset(self) -> int:
        """Sign of the ``k h`` steps inside the product."""
        return -1 if self is FamilySign.MINUS else 1

    @property
    def opposite(self) -> "FamilySign":
        return FamilySign.PLUS if self is FamilySign.MINUS else FamilySign.MINUS

    @classmethod
    def matched_to(cls, operator_sign: int) -> "FamilySign":
        return cls.MINUS if operator_sign > 0 else cls.PLUS


def factorial_power_eval(s: int, family: FamilySign, h: RationalLike, x: RationalLike) -> Fraction:
    if not isinstance(s, int) or s < 0:
        raise RejectedInputError(f"factorial degree must be a non-negative integer, got {s}")
    mesh = positive_mesh(h)
    point = as_rational(x)
    step = family.offset * mesh
    value = Fraction(1)
    for k in range(s):
        value *= point + k * step
    return value


class StirlingTable:
    """Lazily filled table of Stirling numbers of one kind.

    First-kind entries are signed. Reads and fills are guarded by a lock so a
    table can be shared between registry worker threads.
    """

    def __init__(self, kind: str, cap: int = 32):
        if kind not in ("first", "second"):
            raise RejectedInputError(f"unknown Stirling kind '{kind}'")
        self.kind = kind
        self.cap = cap
        self._entries: Dict[Tuple[int, int], int] = {}
        self._lock = threading.Lock()

    def __getitem__(self, key: Tuple[int, int]) -> int:
        s, k = key
        if s > self.cap:
            raise RejectedInputError(f"degree {s} exceeds the Stirling cap {self.cap}")
        if k < 0 or k > s:
            return 0
        with self._lock:
            value = self._entries.get(key)
            if value is None:
                if self.kind == "first":
                    value = int(stirling(s, k, kind=1, signed=True))
                else:
                    value = int(stirling(s, k, kind=2))
                self._entries[key] = value
        return value

    def unsigned(self, s: int, k: int) -> int:
        return abs(self[s, k])

    def cached(self) -> Dict[Tuple[int, int], int]:
        with self._lock:
            return dict(self._entries)


FIRST_KIND = StirlingTable("first", cap=settings.stirling_cap)
SECOND_KIND = StirlingTable("second", cap=settings.stirling_cap)


def factorial_to_monomial_1d(a: int, family: FamilySign, h: RationalLike) -> Dict[int, Fraction]:
    """Coefficients ``c_k`` with ``(x)^{(a)} = sum_k c_k x^k``."""
    mesh = positive_mesh(h)
    out = {}
    for k in range(a + 1):
        if family is FamilySign.MINUS:
            value = FIRST_KIND[a, k]
        else:
            value = FIRST_KIND.unsigned(a, k)
        if value:
            out[k] = value * mesh ** (a - k)
    return out


def monomial_to_factorial_1d(a: int, family: FamilySign, h: RationalLike) -> Dict[int, Fraction]:
    """Coefficients ``d_k`` with ``x^a = sum_k d_k (x)^{(k)}``."""
    mesh = positive_mesh(h)
    out = {}
    for k in range(a + 1):
        value = SECOND_KIND[a, k]
        if family is FamilySign.PLUS and (a - k) & 1:
            value = -value
        if value:
            out[k] = value * mesh ** (a - k)
    return out


def _convolve(alpha: MultiIndex, tables: List[Dict[int, Fraction]]) -> Dict[MultiIndex, Fraction]:
    out: Dict[MultiIndex, Fraction] = {}
    for choice in itertools.product(*(sorted(t.items()) for t in tables)):
        beta = tuple(k for k, _ in choice)
        value = Fraction(1)
        for _, c in choice:
            value *= c
        out[beta] = out.get(beta, Fraction(0)) + value
    return {beta: v for beta, v in out.items() if v}


def factorial_to_monomial(alpha: MultiIndex, family: FamilySign, h: RationalLike) -> Dict[MultiIndex, Fraction]:
    family = FamilySign.parse(family)
    return _convolve(alpha, [factorial_to_monomial_1d(a, family, h) for a in alpha])


def monomial_to_factorial(alpha: MultiIndex, family: FamilySign, h: RationalLike) -> Dict[MultiIndex, Fraction]:
    family = FamilySign.parse(family)
    return _convolve(alpha, [monomial_to_factorial_1d(a, family, h) for a in alpha])


# Unscaled forms, as usually stated with no mesh factors.

def printed_factorial_to_monomial_1d(a: int, family: FamilySign) -> Dict[int, Fraction]:
    """``(x)^{(a)} = sum_k s(a, k) x^k`` with signed ``s`` for ``-`` and unsigned for ``+``."""
    signed = FamilySign.parse(family) is FamilySign.MINUS
    out = {}
    for k in range(a + 1):
        value = int(stirling(a, k, kind=1, signed=signed))
        if value:
            out[k] = Fraction(value)
    return out


def printed_monomial_to_factorial_1d(a: int, family: FamilySign) -> Dict[int, Fraction]:
    """``x^a = sum_k S(a, k) (x)^{(k)}``, with ``(-1)^(a-k)`` for the ``+`` family."""
    alternate = FamilySign.parse(family) is FamilySign.PLUS
    out = {}
    for k in range(a + 1):
        value = int(stirling(a, k, kind=2))
        if alternate and (a - k) & 1:
            value = -value
        if value:
            out[k] = Fraction(value)
    return out


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def nested_sum_coefficient(alpha: MultiIndex, degree: int, family: FamilySign, kind: str) -> Fraction:
    """Nested-sum coefficient depending only on the target degree ``|beta|``.

    Sums ``prod_i S(alpha_i, l_i - l_{i-1})`` over chains
    ``0 = l_0 <= l_1 <= ... <= l_n = degree``.
    """
    family = FamilySign.parse(family)
    single = printed_factorial_to_monomial_1d if kind == "first" else printed_monomial_to_factorial_1d
    tables = [single(a, family) for a in alpha]
    total = Fraction(0)
    for parts in _compositions(degree, len(alpha)):
        term = Fraction(1)
        for table, d in zip(tables, parts):
            term *= table.get(d, Fraction(0))
            if not term:
                break
        total += term
    return total
