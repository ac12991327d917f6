import functools
import json
import traceback
from typing import Callable, List, Optional, Union

import typer

from dclifford.core.exceptions import DCliffordException, ErrorDetail, ErrorResponse
from dclifford.core.logging import app_logger


def create_error_response(
    detail: Union[str, List[ErrorDetail]],
    loc: Optional[List[str]] = None,
    error_type: str = "error",
) -> ErrorResponse:
    """Create a standardized error payload.

    Args:
        detail: Error detail message or list of error details
        loc: Location of the error when ``detail`` is a plain message
        error_type: Error type when ``detail`` is a plain message

    Returns:
        ErrorResponse model
    """
    if isinstance(detail, str) and loc is not None:
        detail = [ErrorDetail(loc=loc, msg=detail, type=error_type)]
    return ErrorResponse(detail=detail)


def format_error(exc: DCliffordException, fmt: str = "text") -> str:
    """Render an exception for the CLI's error stream."""
    if fmt == "json":
        response = create_error_response(exc.to_error_details())
        return json.dumps(response.model_dump(), indent=2)
    lines = [f"error: {exc.detail}"]
    expected = getattr(exc, "expected", None)
    if expected:
        lines.append(f"expected one of: {', '.join(expected)}")
    return "\n".join(lines)


def with_error_handling(func: Callable) -> Callable:
    """Decorator mapping library exceptions onto CLI exit codes.

    ``DCliffordException`` subclasses are logged and reported with their own
    exit code. Anything else is logged with its traceback and exits 1.

    Args:
        func: The command function to wrap

    Returns:
        Wrapped command with the original signature preserved for typer
    """
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        fmt = kwargs.get("output_format", "text")
        try:
            return func(*args, **kwargs)
        except typer.Exit:
            raise
        except DCliffordException as exc:
            app_logger.error(f"{exc.__class__.__name__}: {exc.detail}")
            typer.echo(format_error(exc, fmt), err=True)
            raise typer.Exit(code=exc.exit_code)
        except Exception as exc:
            app_logger.error(
                f"Unhandled exception in {func.__name__}: {exc}",
                extra={"traceback": traceback.format_exc()},
            )
            typer.echo(f"error: unexpected failure: {exc}", err=True)
            raise typer.Exit(code=1)

    return wrapper
