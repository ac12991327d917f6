"""JSON schemas for the apply, convert and eval commands."""
from typing import Dict, List, Mapping, Sequence

from pydantic import BaseModel, ConfigDict, Field

from dclifford import __version__
from dclifford.models.polynomial import SCHEMA_VERSION, PolynomialModel, TermModel
from dclifford.services.exact_algebra import (
    CliffordElement,
    MultiIndex,
    blade_label,
    format_rational,
    join_signed_terms,
)
from dclifford.services.lattice_polynomial import LatticePolynomial, format_polynomial


def format_monomials(monomials: Mapping[MultiIndex, CliffordElement]) -> str:
    """Text of an ordinary-monomial expansion, e.g. ``x1^2 e0 + x1 e0``."""
    pieces = []
    for beta, coeff in sorted(monomials.items()):
        powers = " ".join(
            f"x{i}" if s == 1 else f"x{i}^{s}" for i, s in enumerate(beta, start=1) if s
        )
        for blade, value in coeff.items():
            label = f"e{blade_label(blade)}"
            pieces.append((value, f"{powers} {label}" if powers else label))
    return join_signed_terms(pieces) if pieces else "0"


def monomial_terms(monomials: Mapping[MultiIndex, CliffordElement]) -> List[TermModel]:
    return [
        TermModel(
            alpha=list(beta),
            coeff={blade_label(b): format_rational(v) for b, v in coeff.items()},
        )
        for beta, coeff in sorted(monomials.items())
    ]


class ApplicationModel(BaseModel):
    """An operator chain applied to a polynomial."""
    schema_: str = Field(SCHEMA_VERSION, alias="schema")
    version: str = Field(__version__)
    operators: List[str] = Field(..., description="Operator names, applied left to right")
    source: PolynomialModel
    result: PolynomialModel
    text: str = Field(..., description="Canonical text of the result")

    model_config = ConfigDict(populate_by_name=True)

    @classmethod
    def build(cls, operators: Sequence[str], source: LatticePolynomial, result: LatticePolynomial) -> "ApplicationModel":
        return cls(
            operators=list(operators),
            source=PolynomialModel.from_polynomial(source),
            result=PolynomialModel.from_polynomial(result),
            text=format_polynomial(result),
        )


class ConversionModel(BaseModel):
    """A polynomial rewritten between the monomial and factorial bases.

    ``terms`` are factorial multi-indices for ``to-factorial`` and ordinary
    exponents for ``to-monomial``.
    """
    schema_: str = Field(SCHEMA_VERSION, alias="schema")
    version: str = Field(__version__)
    direction: str = Field(..., pattern=r"^to-(factorial|monomial)$")
    n: int
    h: str
    family: str
    terms: List[TermModel] = Field(default_factory=list)
    text: str

    model_config = ConfigDict(
        populate_by_name=True,
        json_schema_extra={
            "example": {
                "schema": "1",
                "version": "0.1.0",
                "direction": "to-factorial",
                "n": 1,
                "h": "1",
                "family": "-",
                "terms": [
                    {"alpha": [1], "coeff": {"0": "1"}},
                    {"alpha": [2], "coeff": {"0": "1"}},
                ],
                "text": "X1^(1) e0 + X1^(2) e0",
            }
        },
    )

    @classmethod
    def to_factorial(cls, p: LatticePolynomial) -> "ConversionModel":
        model = PolynomialModel.from_polynomial(p)
        return cls(
            direction="to-factorial", n=p.n, h=model.h, family=model.family,
            terms=model.terms, text=format_polynomial(p),
        )

    @classmethod
    def to_monomial(cls, p: LatticePolynomial, monomials: Dict[MultiIndex, CliffordElement]) -> "ConversionModel":
        return cls(
            direction="to-monomial", n=p.n, h=format_rational(p.h), family=p.family.value,
            terms=monomial_terms(monomials), text=format_monomials(monomials),
        )


class EvaluationModel(BaseModel):
    schema_: str = Field(SCHEMA_VERSION, alias="schema")
    version: str = Field(__version__)
    polynomial: PolynomialModel
    point: List[str] = Field(..., description="Lattice point as exact rationals")
    value: Dict[str, str] = Field(..., description="Blade label to rational text")
    text: str

    model_config = ConfigDict(populate_by_name=True)

    @classmethod
    def build(cls, p: LatticePolynomial, point: Sequence, value: CliffordElement) -> "EvaluationModel":
        return cls(
            polynomial=PolynomialModel.from_polynomial(p),
            point=[format_rational(x) for x in point],
            value={blade_label(b): format_rational(v) for b, v in value.items()},
            text=value.format(),
        )
