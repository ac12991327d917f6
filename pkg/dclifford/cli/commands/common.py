"""Shared option handling for the CLI commands."""
import json
from pathlib import Path
from typing import Optional

import typer
from pydantic import BaseModel

from dclifford.cli.parser import parse_polynomial
from dclifford.core.exceptions import ConfigurationError, RejectedInputError
from dclifford.services.exact_algebra import as_rational, positive_mesh
from dclifford.services.factorial_powers import FamilySign
from dclifford.services.lattice_polynomial import LatticePolynomial

OUTPUT_FORMATS = ("text", "json")

# Options shared by the polynomial commands
N_OPTION = typer.Option(..., "--n", help="Lattice dimension")
H_OPTION = typer.Option("1", "--h", help="Mesh width as an exact rational, e.g. 1/2")
FAMILY_OPTION = typer.Option("-", "--family", help="Factorial family sign, '+' or '-'")
EXPR_OPTION = typer.Option(None, "--expr", help="Polynomial expression")
INPUT_OPTION = typer.Option(None, "--input", help="File holding the expression")
FORMAT_OPTION = typer.Option("text", "--format", help="Output format: text or json")


def check_format(output_format: str) -> str:
    if output_format not in OUTPUT_FORMATS:
        raise ConfigurationError(f"--format must be one of {', '.join(OUTPUT_FORMATS)}, got '{output_format}'")
    return output_format


def read_expression(expr: Optional[str], input_path: Optional[Path]) -> str:
    """Exactly one of ``--expr`` and ``--input`` must be given."""
    if (expr is None) == (input_path is None):
        raise ConfigurationError("give exactly one of --expr and --input")
    if expr is not None:
        return expr
    try:
        return Path(input_path).read_text(encoding="utf-8")
    except OSError as exc:
        raise RejectedInputError(f"cannot read {input_path}: {exc.strerror}")


def load_polynomial(
    n: int,
    h: str,
    family: str,
    expr: Optional[str],
    input_path: Optional[Path],
) -> LatticePolynomial:
    """Validate the context flags, then parse the expression."""
    mesh = positive_mesh(h)
    fam = FamilySign.parse(family)
    return parse_polynomial(read_expression(expr, input_path), n, mesh, fam)


def parse_point(text: str, n: int):
    point = [as_rational(item) for item in text.split(",")]
    if len(point) != n:
        raise RejectedInputError(f"point has {len(point)} coordinates, expected {n}")
    return point


def emit(model: BaseModel, output_format: str, text: str) -> None:
    """Print the JSON document or the plain text rendering on stdout."""
    if output_format == "json":
        typer.echo(json.dumps(model.model_dump(by_alias=True), indent=2))
    else:
        typer.echo(text)
