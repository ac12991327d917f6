"""Claim registry commands: verify and claims."""
import json
from pathlib import Path
from typing import Optional

import typer
from pydantic import ValidationError

from dclifford.cli.commands.common import FORMAT_OPTION, check_format, emit
from dclifford.core.error_handlers import with_error_handling
from dclifford.core.exceptions import RejectedInputError
from dclifford.core.logging import get_logger, log_structured
from dclifford.models.claims import CatalogueModel, ClaimCatalogueEntry, ClaimReportModel
from dclifford.services.claim_registry import (
    Grid,
    format_report_table,
    list_claims,
    parse_grid_list,
    replay_witness,
    run_registry,
)

logger = get_logger(__name__)

FILTER_OPTION = typer.Option("*", "--filter", help="Claim id pattern, e.g. 'Eq4*'")


def _load_report(path: Path) -> ClaimReportModel:
    try:
        return ClaimReportModel.model_validate(json.loads(path.read_text(encoding="utf-8")))
    except OSError as exc:
        raise RejectedInputError(f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise RejectedInputError(f"{path} is not JSON: {exc.msg} at line {exc.lineno}")
    except ValidationError as exc:
        raise RejectedInputError(
            f"{path} is not a claim report",
            errors=[{"loc": [str(part) for part in e["loc"]], "msg": e["msg"], "type": e["type"]} for e in exc.errors()],
        )


def _replay(path: Path) -> None:
    """Re-evaluate every stored witness; exit 1 if any fails to reproduce."""
    report = _load_report(path)
    failures = 0
    for claim in report.claims:
        if claim.witness is None:
            continue
        reproduced = replay_witness(claim.id, claim.witness.to_witness())
        failures += not reproduced
        typer.echo(f"{claim.id}: {'reproduced' if reproduced else 'NOT reproduced'}")
    log_structured(logger, "info", "replayed witnesses", {"report": str(path), "failures": failures})
    if failures:
        raise typer.Exit(code=1)


@with_error_handling
def verify_command(
    filter: str = FILTER_OPTION,
    seed: Optional[int] = typer.Option(None, "--seed", help="Random seed (default from settings)"),
    dimensions: Optional[str] = typer.Option(None, "--dimensions", help="Grid dimensions, e.g. 1,2"),
    max_degree: Optional[int] = typer.Option(None, "--max-degree", min=0, help="Largest grid degree"),
    mesh_widths: Optional[str] = typer.Option(None, "--mesh-widths", help="Grid mesh widths, e.g. 1,1/2"),
    trials: Optional[int] = typer.Option(None, "--trials", min=0, help="Random inputs per grid cell"),
    workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Claims evaluated in parallel"),
    replay: Optional[Path] = typer.Option(None, "--replay", help="Replay the witnesses of a JSON report"),
    output_format: str = FORMAT_OPTION,
):
    """Run the claim registry; exits 1 unless every expected-exact claim confirms."""
    check_format(output_format)
    if replay is not None:
        _replay(replay)
        return
    grid = Grid.from_settings(
        dimensions=parse_grid_list(dimensions, "dimensions"),
        max_degree=max_degree,
        mesh_widths=parse_grid_list(mesh_widths, "mesh widths"),
        trials=trials,
    )
    report = run_registry(filter, grid, seed, workers)
    if not report.claims:
        raise RejectedInputError(f"no claim matches '{filter}'")
    emit(ClaimReportModel.from_report(report), output_format, format_report_table(report))
    if not report.ok:
        raise typer.Exit(code=1)


@with_error_handling
def claims_command(
    filter: str = FILTER_OPTION,
    output_format: str = FORMAT_OPTION,
):
    """List the claim catalogue."""
    check_format(output_format)
    records = list_claims(filter)
    model = CatalogueModel(filter=filter, claims=[ClaimCatalogueEntry.from_record(r) for r in records])
    width = max((len(r.id) for r in records), default=0)
    text = "\n".join(
        f"{r.id.ljust(width)}  {r.group:<10}  {r.expectation.value:<16}  {r.anchor}" for r in records
    )
    emit(model, output_format, text)
