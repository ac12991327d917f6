# Pydantic schemas for everything the CLI reads or writes as JSON.
from dclifford.models.polynomial import SCHEMA_VERSION, PolynomialModel, TermModel
from dclifford.models.fischer import FischerComponentModel, FischerResultModel, KernelModel
from dclifford.models.claims import (
    CatalogueModel,
    ClaimCatalogueEntry,
    ClaimReportModel,
    ClaimResultModel,
    GridCellModel,
    GridModel,
    WitnessModel,
)
from dclifford.models.results import ApplicationModel, ConversionModel, EvaluationModel

__all__ = [
    "SCHEMA_VERSION",
    "PolynomialModel",
    "TermModel",
    "FischerComponentModel",
    "FischerResultModel",
    "KernelModel",
    "CatalogueModel",
    "ClaimCatalogueEntry",
    "ClaimReportModel",
    "ClaimResultModel",
    "GridCellModel",
    "GridModel",
    "WitnessModel",
    "ApplicationModel",
    "ConversionModel",
    "EvaluationModel",
]
