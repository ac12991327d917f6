"""JSON schema for lattice polynomials."""
from typing import Dict, List

from pydantic import BaseModel, ConfigDict, Field

from dclifford.services.exact_algebra import (
    CliffordElement,
    as_rational,
    blade_from_label,
    blade_label,
    format_rational,
)
from dclifford.services.factorial_powers import FamilySign
from dclifford.services.lattice_polynomial import LatticePolynomial

SCHEMA_VERSION = "1"


class TermModel(BaseModel):
    """One factorial multi-index with its Clifford coefficient."""
    alpha: List[int] = Field(..., description="Multi-index of the factorial power")
    coeff: Dict[str, str] = Field(
        ..., description="Blade label ('0', '1', '12', ...) to exact rational text"
    )


class PolynomialModel(BaseModel):
    """Request/response model for a ``LatticePolynomial``."""
    schema_: str = Field(SCHEMA_VERSION, alias="schema", description="Schema version")
    n: int = Field(..., ge=1, description="Lattice dimension")
    h: str = Field(..., description="Mesh width as exact rational text")
    family: str = Field(..., pattern=r"^[+-]$", description="Factorial family sign")
    terms: List[TermModel] = Field(default_factory=list, description="Terms in canonical order")

    model_config = ConfigDict(
        populate_by_name=True,
        json_schema_extra={
            "example": {
                "schema": "1",
                "n": 2,
                "h": "1",
                "family": "-",
                "terms": [
                    {"alpha": [0, 1], "coeff": {"12": "-1/2"}},
                    {"alpha": [1, 0], "coeff": {"0": "1/2"}},
                ],
            }
        },
    )

    @classmethod
    def from_polynomial(cls, p: LatticePolynomial) -> "PolynomialModel":
        return cls(
            n=p.n,
            h=format_rational(p.h),
            family=p.family.value,
            terms=[
                TermModel(
                    alpha=list(alpha),
                    coeff={blade_label(b): format_rational(v) for b, v in coeff.items()},
                )
                for alpha, coeff in p.items()
            ],
        )

    def to_polynomial(self) -> LatticePolynomial:
        """Rebuild the polynomial, validating blades, rationals and multi-indices."""
        terms = {}
        for term in self.terms:
            element = CliffordElement(self.n, {
                blade_from_label(label, self.n): as_rational(value)
                for label, value in term.coeff.items()
            })
            alpha = tuple(term.alpha)
            terms[alpha] = terms[alpha] + element if alpha in terms else element
        return LatticePolynomial(self.n, as_rational(self.h), FamilySign.parse(self.family), terms)
