"""Polynomial expression grammar.

Expressions are sums of terms such as ``1/2 X1^(1) e1 - X2^(1) e21``. The
mesh width and factorial family come from flags, not from the text. Blade
tokens may list axes in any order and are normalized with the product sign.
"""
from fractions import Fraction
from functools import lru_cache
from typing import List, Sequence, Tuple

import lark

from dclifford.core.exceptions import DCliffordException, ExpressionSyntaxError, RejectedInputError
from dclifford.core.logging import get_logger
from dclifford.services.exact_algebra import CliffordElement, RationalLike, as_rational, ordered_blade
from dclifford.services.factorial_powers import FamilySign
from dclifford.services.lattice_polynomial import LatticePolynomial

logger = get_logger(__name__)

GRAMMAR = r"""
    poly: lead (SIGN term)*
    lead: SIGN? term

    term: RATIONAL ("*"? factor)*
        | factor ("*"? factor)*

    ?factor: power
           | BLADE
    power: "X" INT "^(" INT ")"

    SIGN: "+" | "-"
    RATIONAL: /\d+(\/\d+)?/
    INT: /\d+/
    BLADE: /e\d+/

    %import common.WS
    %ignore WS
"""

# Friendlier names for terminals in syntax error messages
TOKEN_NAMES = {
    "SIGN": "'+' or '-'",
    "RATIONAL": "rational",
    "INT": "integer",
    "BLADE": "blade (e0, e1, e12, ...)",
    "X": "'X'",
    "__ANON_0": "'^('",
    "CIRCUMFLEX": "'^('",
    "RPAR": "')'",
    "STAR": "'*'",
    "$END": "end of input",
}


@lru_cache(maxsize=1)
def _parser() -> lark.Lark:
    """Create/retrieve the singleton LALR parser."""
    return lark.Lark(GRAMMAR, start="poly", parser="lalr", lexer="contextual")


Term = Tuple[Tuple[int, ...], CliffordElement]


class _PolynomialTransformer(lark.Transformer):
    """Builds ``(alpha, coefficient)`` terms for a fixed dimension."""

    def __init__(self, n: int):
        super().__init__()
        self.n = n

    @lark.v_args(inline=True)
    def power(self, axis_token, exponent_token) -> Tuple[str, int, int]:
        axis = int(axis_token)
        if axis < 1 or axis > self.n:
            raise RejectedInputError(f"axis {axis} exceeds dimension {self.n}")
        return ("power", axis, int(exponent_token))

    def term(self, items) -> Term:
        coefficient = Fraction(1)
        alpha = [0] * self.n
        seen = set()
        element = CliffordElement.scalar(self.n)
        for item in items:
            if isinstance(item, lark.Token) and item.type == "RATIONAL":
                coefficient = as_rational(str(item))
            elif isinstance(item, lark.Token) and item.type == "BLADE":
                element = element * self._blade(str(item))
            else:
                _, axis, exponent = item
                if axis in seen:
                    raise RejectedInputError(f"factor X{axis} appears twice in one term")
                seen.add(axis)
                alpha[axis - 1] = exponent
        return tuple(alpha), element.scale(coefficient)

    def _blade(self, text: str) -> CliffordElement:
        digits = [int(d) for d in text[1:]]
        if digits == [0]:
            return CliffordElement.scalar(self.n)
        if 0 in digits:
            raise RejectedInputError(f"blade index 0 is only valid as e0, got '{text}'")
        if len(set(digits)) != len(digits):
            raise RejectedInputError(f"blade '{text}' repeats an index")
        sign, blade = ordered_blade(digits, self.n)
        return CliffordElement(self.n, {blade: sign})

    def lead(self, items) -> Term:
        if len(items) == 2:
            sign, (alpha, element) = items
            return alpha, (-element if str(sign) == "-" else element)
        return items[0]

    def poly(self, items) -> List[Term]:
        terms = [items[0]]
        for sign, (alpha, element) in zip(items[1::2], items[2::2]):
            terms.append((alpha, -element if str(sign) == "-" else element))
        return terms


def _expected(names: Sequence[str]) -> List[str]:
    return [TOKEN_NAMES.get(name, name) for name in names]


def parse_terms(text: str, n: int) -> List[Term]:
    """Parse ``text`` into ``(alpha, coefficient)`` pairs, in source order."""
    if not isinstance(n, int) or n < 1:
        raise RejectedInputError(f"dimension must be a positive integer, got {n}")
    try:
        tree = _parser().parse(text)
    except lark.exceptions.UnexpectedCharacters as exc:
        raise ExpressionSyntaxError(
            f"unexpected character {text[exc.pos_in_stream]!r} at line {exc.line}, column {exc.column}",
            exc.line, exc.column, _expected(exc.allowed or ()),
        )
    except lark.exceptions.UnexpectedEOF as exc:
        raise ExpressionSyntaxError(
            "unexpected end of expression", exc.line if exc.line > 0 else None,
            exc.column if exc.column > 0 else None, _expected(exc.expected),
        )
    except lark.exceptions.UnexpectedToken as exc:
        where = f"line {exc.line}, column {exc.column}" if exc.line > 0 else "end of input"
        found = "end of input" if exc.token.type == "$END" else repr(str(exc.token))
        raise ExpressionSyntaxError(
            f"unexpected {found} at {where}",
            exc.line if exc.line > 0 else None, exc.column if exc.column > 0 else None,
            _expected(exc.expected),
        )
    try:
        return _PolynomialTransformer(n).transform(tree)
    except lark.exceptions.VisitError as exc:
        if isinstance(exc.orig_exc, DCliffordException):
            raise exc.orig_exc
        raise


def parse_polynomial(text: str, n: int, h: RationalLike, family) -> LatticePolynomial:
    """``X_i^(s)`` tokens are factorial powers of the given family; like terms are summed."""
    terms = parse_terms(text, n)
    logger.debug(f"parsed {len(terms)} terms from {text!r}")
    return LatticePolynomial(n, h, FamilySign.parse(family), _collect(terms))


def parse_monomial_expansion(text: str, n: int):
    """The same grammar read as ordinary monomials ``x^alpha``."""
    return _collect(parse_terms(text, n))


def _collect(terms: Sequence[Term]):
    collected = {}
    for alpha, element in terms:
        collected[alpha] = collected[alpha] + element if alpha in collected else element
    return {alpha: element for alpha, element in collected.items() if not element.is_zero()}
