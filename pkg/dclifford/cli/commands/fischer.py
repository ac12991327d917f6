"""Fischer decomposition and kernel commands."""
from pathlib import Path
from typing import Optional

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
)
from dclifford.core.error_handlers import with_error_handling
from dclifford.core.exceptions import ConfigurationError
from dclifford.core.logging import get_logger, log_structured
from dclifford.models.fischer import FischerResultModel, KernelModel
from dclifford.services.exact_algebra import positive_mesh
from dclifford.services.factorial_powers import FamilySign
from dclifford.services.fischer_decomposition import (
    STRATEGIES,
    FischerResult,
    harmonic_fischer_decompose,
    harmonic_kernel,
    fischer_decompose,
    monogenic_kernel,
)
from dclifford.services.lattice_polynomial import LatticePolynomial, format_polynomial
from dclifford.services.quaternion_dirac import (
    MixedVariant,
    mixed_kernel,
    quaternion_harmonic_decompose,
    quaternionic_fischer_decompose,
)

logger = get_logger(__name__)

KERNEL_KINDS = ("monogenic", "harmonic", "mixed")

STRATEGY_OPTION = typer.Option("auto", "--strategy", help="exact, graded or auto")
VARIANT_OPTION = typer.Option(None, "--variant", help="Quaternionic variant '-+' or '+-' (n = 3)")


def _check_strategy(strategy: str) -> None:
    if strategy not in STRATEGIES:
        raise ConfigurationError(f"--strategy must be one of {', '.join(STRATEGIES)}, got '{strategy}'")


def format_result(result: FischerResult, lift: str) -> str:
    """Plain-text rendering, one line per component."""
    status = "feasible" if result.feasible else "infeasible"
    lines = [f"strategy: {result.strategy} ({status})", f"degree: {result.degree}"]
    for piece in result.components:
        lines.append(f"{lift}^{piece.power} M_{piece.degree} = {format_polynomial(piece.component)}")
    if result.residual is not None:
        lines.append(f"residual: {format_polynomial(result.residual)}")
    dims = ", ".join(f"{k}:{v}" for k, v in sorted(result.kernel_dimensions.items(), reverse=True))
    lines.append(f"kernel dimensions: {dims or 'none'}")
    lines.append(f"annihilated: {'true' if result.annihilated else 'false'}")
    if result.exact_feasible is not None:
        lines.append(f"exact feasible: {'true' if result.exact_feasible else 'false'}")
    lines.extend(f"note: {d}" for d in result.diagnostics)
    return "\n".join(lines)


def _emit_result(result: FischerResult, space: str, lift: str, output_format: str) -> None:
    log_structured(logger, "info", "decomposition", {
        "space": space, "strategy": result.strategy, "feasible": result.feasible,
    })
    emit(FischerResultModel.from_result(result, space), output_format, format_result(result, lift))


@with_error_handling
def decompose_command(
    n: int = N_OPTION,
    h: str = H_OPTION,
    family: str = FAMILY_OPTION,
    expr: Optional[str] = EXPR_OPTION,
    input_path: Optional[Path] = INPUT_OPTION,
    strategy: str = STRATEGY_OPTION,
    variant: Optional[str] = VARIANT_OPTION,
    output_format: str = FORMAT_OPTION,
):
    """Fischer decomposition into monogenic components."""
    check_format(output_format)
    _check_strategy(strategy)
    p = load_polynomial(n, h, family, expr, input_path)
    if variant is None:
        _emit_result(fischer_decompose(p, strategy), "monogenic", "(mh)", output_format)
        return
    mixed = MixedVariant.parse(variant)
    if n != 3 or p.family is not mixed.family:
        raise ConfigurationError(
            f"variant {mixed.value} needs --n 3 and --family {mixed.family.value}"
        )
    _emit_result(quaternionic_fischer_decompose(p, mixed, strategy), f"mixed {mixed.value}", "(mh)", output_format)


@with_error_handling
def harmonic_command(
    n: int = N_OPTION,
    h: str = H_OPTION,
    family: str = FAMILY_OPTION,
    expr: Optional[str] = EXPR_OPTION,
    input_path: Optional[Path] = INPUT_OPTION,
    strategy: str = STRATEGY_OPTION,
    quaternion: bool = typer.Option(False, "--quaternion", help="Restrict to the quaternion blades (n = 3)"),
    output_format: str = FORMAT_OPTION,
):
    """Fischer decomposition into harmonic components."""
    check_format(output_format)
    _check_strategy(strategy)
    p = load_polynomial(n, h, family, expr, input_path)
    if quaternion:
        result = quaternion_harmonic_decompose(p, strategy)
    else:
        result = harmonic_fischer_decompose(p, strategy)
    _emit_result(result, "harmonic", "|mh|^2", output_format)


@with_error_handling
def kernel_command(
    degree: int = typer.Option(..., "--degree", min=0, help="Homogeneous degree k"),
    n: int = N_OPTION,
    h: str = H_OPTION,
    family: Optional[str] = typer.Option(None, "--family", help="Factorial family sign (default '-')"),
    kind: str = typer.Option("monogenic", "--kind", help="monogenic, harmonic or mixed"),
    variant: Optional[str] = VARIANT_OPTION,
    output_format: str = FORMAT_OPTION,
):
    """Basis of the degree-k kernel."""
    check_format(output_format)
    if kind not in KERNEL_KINDS:
        raise ConfigurationError(f"--kind must be one of {', '.join(KERNEL_KINDS)}, got '{kind}'")
    mesh = positive_mesh(h)
    if kind == "mixed":
        mixed = MixedVariant.parse(variant or "-+")
        if n != 3:
            raise ConfigurationError("--kind mixed needs --n 3")
        if family is not None and FamilySign.parse(family) is not mixed.family:
            raise ConfigurationError(f"variant {mixed.value} acts on family {mixed.family.value}")
        fam = mixed.family
        basis = mixed_kernel(degree, mesh, mixed)
    else:
        if variant is not None:
            raise ConfigurationError("--variant only applies to --kind mixed")
        fam = FamilySign.parse(family or "-")
        if kind == "monogenic":
            basis = monogenic_kernel(degree, n, mesh, fam)
        else:
            basis = harmonic_kernel(degree, n, mesh, fam)
    like = LatticePolynomial.zero(n, mesh, fam)
    text = "\n".join(
        [f"{kind} kernel ({basis.operator}), degree {degree}: dimension {basis.dimension}"]
        + [f"  {format_polynomial(m)}" for m in basis.elements]
    )
    emit(KernelModel.from_basis(kind, basis, like), output_format, text)
