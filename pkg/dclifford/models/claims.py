"""JSON schemas for the claim catalogue and verification reports."""
from fractions import Fraction
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from dclifford import __version__
from dclifford.models.polynomial import SCHEMA_VERSION, PolynomialModel
from dclifford.services.claim_registry import (
    ClaimRecord,
    ClaimReport,
    ClaimResult,
    Grid,
    GridCell,
    Witness,
)
from dclifford.services.exact_algebra import as_rational, format_rational


class GridCellModel(BaseModel):
    n: int = Field(..., ge=1)
    k: int = Field(..., ge=0)
    h: str = Field(..., description="Mesh width as exact rational text")
    sign: str = Field(..., pattern=r"^[+-]$", description="Sign of the difference operators")

    @classmethod
    def from_cell(cls, cell: GridCell) -> "GridCellModel":
        return cls(n=cell.n, k=cell.k, h=format_rational(cell.h), sign="+" if cell.sign > 0 else "-")

    def to_cell(self) -> GridCell:
        return GridCell(self.n, self.k, as_rational(self.h), 1 if self.sign == "+" else -1)


class WitnessModel(BaseModel):
    """A concrete disagreement, replayable from this payload alone."""
    cell: GridCellModel
    inputs: Dict[str, PolynomialModel] = Field(default_factory=dict)
    lhs: str = Field(..., description="Canonical text of the left-hand side")
    rhs: str = Field(..., description="Canonical text of the right-hand side")

    @classmethod
    def from_witness(cls, witness: Witness) -> "WitnessModel":
        return cls(
            cell=GridCellModel.from_cell(witness.cell),
            inputs={name: PolynomialModel.from_polynomial(p) for name, p in sorted(witness.inputs.items())},
            lhs=witness.lhs,
            rhs=witness.rhs,
        )

    def to_witness(self) -> Witness:
        return Witness(
            self.cell.to_cell(),
            {name: p.to_polynomial() for name, p in self.inputs.items()},
            self.lhs,
            self.rhs,
        )


class ClaimResultModel(BaseModel):
    id: str
    anchor: str
    group: str
    expectation: str
    status: str = Field(..., description="confirmed, refuted or infeasible")
    cells: int = Field(0, description="Grid cells visited")
    samples: int = Field(0, description="Inputs evaluated")
    witness: Optional[WitnessModel] = None
    diagnostic: Optional[str] = None

    @classmethod
    def from_result(cls, result: ClaimResult) -> "ClaimResultModel":
        return cls(
            id=result.id,
            anchor=result.anchor,
            group=result.group,
            expectation=result.expectation.value,
            status=result.status.value,
            cells=result.cells,
            samples=result.samples,
            witness=WitnessModel.from_witness(result.witness) if result.witness else None,
            diagnostic=result.diagnostic,
        )


class GridModel(BaseModel):
    dimensions: List[int]
    max_degree: int
    mesh_widths: List[str]
    trials: int

    @classmethod
    def from_grid(cls, grid: Grid) -> "GridModel":
        return cls(
            dimensions=list(grid.dimensions),
            max_degree=grid.max_degree,
            mesh_widths=[format_rational(h) for h in grid.mesh_widths],
            trials=grid.trials,
        )

    def to_grid(self) -> Grid:
        return Grid(
            tuple(self.dimensions), self.max_degree,
            tuple(Fraction(h) for h in self.mesh_widths), self.trials,
        )


class ClaimReportModel(BaseModel):
    """Verification report; identical arguments give identical JSON."""
    schema_: str = Field(SCHEMA_VERSION, alias="schema")
    version: str = Field(__version__)
    seed: int
    filter: str
    grid: GridModel
    ok: bool = Field(..., description="Every expected-exact claim confirmed")
    counts: Dict[str, int]
    claims: List[ClaimResultModel] = Field(default_factory=list)

    model_config = ConfigDict(populate_by_name=True)

    @classmethod
    def from_report(cls, report: ClaimReport) -> "ClaimReportModel":
        return cls(
            version=report.version,
            seed=report.seed,
            filter=report.filter,
            grid=GridModel.from_grid(report.grid),
            ok=report.ok,
            counts=report.counts,
            claims=[ClaimResultModel.from_result(c) for c in report.claims],
        )


class ClaimCatalogueEntry(BaseModel):
    id: str
    anchor: str
    group: str
    expectation: str

    @classmethod
    def from_record(cls, record: ClaimRecord) -> "ClaimCatalogueEntry":
        return cls(id=record.id, anchor=record.anchor, group=record.group, expectation=record.expectation.value)


class CatalogueModel(BaseModel):
    schema_: str = Field(SCHEMA_VERSION, alias="schema")
    version: str = Field(__version__)
    filter: str = "*"
    claims: List[ClaimCatalogueEntry] = Field(default_factory=list)

    model_config = ConfigDict(
        populate_by_name=True,
        json_schema_extra={
            "example": {
                "schema": "1",
                "version": "0.1.0",
                "filter": "Eq41",
                "claims": [{
                    "id": "Eq41",
                    "anchor": "D^(+-) D^(-+) = -Delta_h = D^(-+) D^(+-)",
                    "group": "quaternion",
                    "expectation": "expected-exact",
                }],
            }
        },
    )
