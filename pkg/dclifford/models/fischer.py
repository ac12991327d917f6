"""JSON schemas for Fischer decompositions and kernel bases."""
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from dclifford import __version__
from dclifford.models.polynomial import SCHEMA_VERSION, PolynomialModel
from dclifford.services.exact_algebra import format_rational
from dclifford.services.fischer_decomposition import (
    FischerComponent,
    FischerResult,
    MonogenicBasis,
)
from dclifford.services.lattice_polynomial import LatticePolynomial


class FischerComponentModel(BaseModel):
    """``lift^power`` applied to a kernel element of degree ``degree``."""
    power: int = Field(..., ge=0, description="Power of the lifting variable")
    degree: int = Field(..., ge=0, description="Degree of the kernel component")
    component: PolynomialModel

    @classmethod
    def from_component(cls, piece: FischerComponent) -> "FischerComponentModel":
        return cls(
            power=piece.power,
            degree=piece.degree,
            component=PolynomialModel.from_polynomial(piece.component),
        )

    def to_component(self) -> FischerComponent:
        return FischerComponent(self.power, self.degree, self.component.to_polynomial())


class FischerResultModel(BaseModel):
    schema_: str = Field(SCHEMA_VERSION, alias="schema")
    version: str = Field(__version__, description="Library version that produced the result")
    space: str = Field("monogenic", description="Space the decomposition was taken in")
    strategy: str
    feasible: bool
    degree: int
    source: PolynomialModel
    components: List[FischerComponentModel] = Field(default_factory=list)
    residual: Optional[PolynomialModel] = None
    kernel_dimensions: Dict[str, int] = Field(
        default_factory=dict, description="Kernel dimension per component degree"
    )
    annihilated: bool = False
    exact_feasible: Optional[bool] = None
    diagnostics: List[str] = Field(default_factory=list)

    model_config = ConfigDict(populate_by_name=True)

    @classmethod
    def from_result(cls, result: FischerResult, space: str = "monogenic") -> "FischerResultModel":
        return cls(
            space=space,
            strategy=result.strategy,
            feasible=result.feasible,
            degree=result.degree,
            source=PolynomialModel.from_polynomial(result.source),
            components=[FischerComponentModel.from_component(c) for c in result.components],
            residual=(
                PolynomialModel.from_polynomial(result.residual)
                if result.residual is not None else None
            ),
            kernel_dimensions={str(k): v for k, v in sorted(result.kernel_dimensions.items(), reverse=True)},
            annihilated=result.annihilated,
            exact_feasible=result.exact_feasible,
            diagnostics=list(result.diagnostics),
        )

    def to_result(self) -> FischerResult:
        return FischerResult(
            strategy=self.strategy,
            feasible=self.feasible,
            degree=self.degree,
            source=self.source.to_polynomial(),
            components=[c.to_component() for c in self.components],
            residual=self.residual.to_polynomial() if self.residual is not None else None,
            kernel_dimensions={int(k): v for k, v in self.kernel_dimensions.items()},
            annihilated=self.annihilated,
            exact_feasible=self.exact_feasible,
            diagnostics=list(self.diagnostics),
        )


class KernelModel(BaseModel):
    """A kernel basis of one degree."""
    schema_: str = Field(SCHEMA_VERSION, alias="schema")
    version: str = Field(__version__)
    kind: str = Field(..., description="monogenic, harmonic or mixed")
    operator: str
    n: int
    h: str
    family: str
    degree: int
    dimension: int
    rank: int
    basis: List[PolynomialModel] = Field(default_factory=list)

    model_config = ConfigDict(populate_by_name=True)

    @classmethod
    def from_basis(cls, kind: str, basis: MonogenicBasis, like: LatticePolynomial) -> "KernelModel":
        return cls(
            kind=kind,
            operator=basis.operator,
            n=like.n,
            h=format_rational(like.h),
            family=like.family.value,
            degree=basis.degree,
            dimension=basis.dimension,
            rank=basis.matrix.rank(),
            basis=[PolynomialModel.from_polynomial(m) for m in basis.elements],
        )
