"""Commands acting on a single polynomial: apply, convert and eval."""
from pathlib import Path
from typing import List, Optional

import typer

from dclifford.cli.commands.common import (
    EXPR_OPTION,
    FAMILY_OPTION,
    FORMAT_OPTION,
    H_OPTION,
    INPUT_OPTION,
    N_OPTION,
    check_format,
    emit,
    load_polynomial,
    parse_point,
    read_expression,
)
from dclifford.cli.parser import parse_monomial_expansion
from dclifford.core.error_handlers import with_error_handling
from dclifford.core.exceptions import ConfigurationError
from dclifford.core.logging import get_logger, log_structured
from dclifford.models.results import ApplicationModel, ConversionModel, EvaluationModel, format_monomials
from dclifford.services.difference_operators import (
    ComposedOperator,
    check_operator_axes,
    parse_operator_name,
)
from dclifford.services.exact_algebra import positive_mesh
from dclifford.services.factorial_powers import FamilySign
from dclifford.services.lattice_polynomial import LatticePolynomial, evaluate, format_polynomial
from dclifford.services.quaternion_dirac import MixedDiracOperator, MixedVariant

logger = get_logger(__name__)

CONVERSIONS = ("to-factorial", "to-monomial")


def _operator(name: str, n: int):
    """Difference operator names, plus ``D-+`` / ``D+-`` for the quaternionic pair."""
    if name.strip() in ("D-+", "D+-"):
        if n != 3:
            raise ConfigurationError(f"operator {name} needs --n 3")
        return MixedDiracOperator(MixedVariant.parse(name.strip()[1:]))
    operator = parse_operator_name(name)
    check_operator_axes(operator, n)
    return operator


@with_error_handling
def apply_command(
    op: List[str] = typer.Option(..., "--op", help="Operator name; repeat to compose left to right"),
    n: int = N_OPTION,
    h: str = H_OPTION,
    family: str = FAMILY_OPTION,
    expr: Optional[str] = EXPR_OPTION,
    input_path: Optional[Path] = INPUT_OPTION,
    output_format: str = FORMAT_OPTION,
):
    """Apply a chain of difference operators to a polynomial."""
    check_format(output_format)
    p = load_polynomial(n, h, family, expr, input_path)
    chain = ComposedOperator(tuple(_operator(name, n) for name in op))
    result = chain.apply(p)
    log_structured(logger, "info", "applied operators", {"operators": chain.name, "terms": len(result.terms)})
    model = ApplicationModel.build([part.name for part in chain.parts], p, result)
    emit(model, output_format, format_polynomial(result))


@with_error_handling
def convert_command(
    direction: str = typer.Option(..., "--direction", help="to-factorial or to-monomial"),
    n: int = N_OPTION,
    h: str = H_OPTION,
    family: str = FAMILY_OPTION,
    expr: Optional[str] = EXPR_OPTION,
    input_path: Optional[Path] = INPUT_OPTION,
    output_format: str = FORMAT_OPTION,
):
    """Rewrite between ordinary monomials and factorial powers.

    For ``to-factorial`` the expression's ``Xi^(s)`` tokens are read as the
    ordinary powers ``x_i^s``.
    """
    check_format(output_format)
    if direction not in CONVERSIONS:
        raise ConfigurationError(f"--direction must be one of {', '.join(CONVERSIONS)}, got '{direction}'")
    if direction == "to-factorial":
        monomials = parse_monomial_expansion(read_expression(expr, input_path), n)
        p = LatticePolynomial.from_monomials(n, positive_mesh(h), FamilySign.parse(family), monomials)
        emit(ConversionModel.to_factorial(p), output_format, format_polynomial(p))
        return
    p = load_polynomial(n, h, family, expr, input_path)
    monomials = p.to_monomials()
    emit(ConversionModel.to_monomial(p, monomials), output_format, format_monomials(monomials))


@with_error_handling
def eval_command(
    at: str = typer.Option(..., "--at", help="Comma-separated rational coordinates"),
    n: int = N_OPTION,
    h: str = H_OPTION,
    family: str = FAMILY_OPTION,
    expr: Optional[str] = EXPR_OPTION,
    input_path: Optional[Path] = INPUT_OPTION,
    output_format: str = FORMAT_OPTION,
):
    """Evaluate a polynomial at a point."""
    check_format(output_format)
    p = load_polynomial(n, h, family, expr, input_path)
    point = parse_point(at, n)
    value = evaluate(p, point)
    emit(EvaluationModel.build(p, point, value), output_format, value.format())
