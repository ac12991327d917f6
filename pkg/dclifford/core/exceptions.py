from typing import Any, Dict, List, Optional, Sequence, Union

from pydantic import BaseModel


class ErrorDetail(BaseModel):
    """Model for detailed error information."""
    loc: List[str] = []
    msg: str
    type: str


class ErrorResponse(BaseModel):
    """Standard error payload printed by the CLI."""
    detail: Union[str, List[ErrorDetail]]


class DCliffordException(Exception):
    """Base exception for library-specific errors.

    Carries a human-readable detail and the process exit code the CLI uses
    when the error escapes a command.
    """
    error_type = "dclifford_error"

    def __init__(
        self,
        detail: str = "An unexpected error occurred",
        exit_code: int = 1,
    ):
        self.detail = detail
        self.exit_code = exit_code
        super().__init__(detail)

    def to_error_details(self) -> List[ErrorDetail]:
        return [ErrorDetail(loc=[], msg=self.detail, type=self.error_type)]


class RejectedInputError(DCliffordException):
    """Exception raised when an input violates a precondition.

    Covers dimension and family mismatches, malformed rationals, out-of-range
    axes or blades, and invalid operator names.
    """
    error_type = "rejected_input"

    def __init__(
        self,
        detail: str = "Rejected input",
        errors: Optional[List[Dict[str, Any]]] = None,
    ):
        self.errors = errors or []
        super().__init__(detail=detail, exit_code=2)

    def to_error_details(self) -> List[ErrorDetail]:
        if not self.errors:
            return super().to_error_details()
        return [
            ErrorDetail(
                loc=[str(part) for part in error.get("loc", [])],
                msg=error.get("msg", self.detail),
                type=error.get("type", self.error_type),
            )
            for error in self.errors
        ]


class ExpressionSyntaxError(RejectedInputError):
    """Exception raised when a polynomial expression does not parse.

    Attributes:
        line: 1-based line of the offending character, if known
        column: 1-based column of the offending character, if known
        expected: Terminal names the parser would have accepted
    """
    error_type = "syntax_error"

    def __init__(
        self,
        detail: str = "Invalid expression",
        line: Optional[int] = None,
        column: Optional[int] = None,
        expected: Sequence[str] = (),
    ):
        self.line = line
        self.column = column
        self.expected = sorted(set(expected))
        super().__init__(
            detail=detail,
            errors=[{
                "loc": ["expr", str(line or 0), str(column or 0)],
                "msg": detail,
                "type": self.error_type,
            }],
        )


class ClosureError(DCliffordException):
    """Exception raised when an operator image leaves the requested target span.

    Attributes:
        operator: Name of the operator being assembled
        element: Canonical text of the offending basis element
        stray_terms: Text of the image terms outside the target span
    """
    error_type = "closure_error"

    def __init__(
        self,
        operator: str,
        element: str,
        stray_terms: Sequence[str] = (),
    ):
        self.operator = operator
        self.element = element
        self.stray_terms = list(stray_terms)
        detail = f"{operator} maps basis element {element} outside the target span"
        if self.stray_terms:
            detail = f"{detail}: {', '.join(self.stray_terms)}"
        super().__init__(detail=detail, exit_code=3)


class InfeasibleError(DCliffordException):
    """Exception raised when an exact linear system has no solution."""
    error_type = "infeasible"

    def __init__(self, detail: str = "Linear system is infeasible"):
        super().__init__(detail=detail, exit_code=3)


class ConfigurationError(DCliffordException):
    """Exception raised when settings or flag combinations are invalid."""
    error_type = "configuration_error"

    def __init__(self, detail: str = "Configuration error"):
        super().__init__(detail=detail, exit_code=2)
