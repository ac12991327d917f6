"""Core module for the library.

This module contains the ambient functionality shared by the services and the
CLI, including:
- Configuration management
- Logging
- Exception hierarchy
- CLI error handling
"""

from dclifford.core.config import settings, get_setting, get_settings_dict
from dclifford.core.logging import app_logger, get_logger, log_structured
from dclifford.core.exceptions import (
    DCliffordException,
    RejectedInputError,
    ExpressionSyntaxError,
    ClosureError,
    InfeasibleError,
    ConfigurationError,
    ErrorDetail,
    ErrorResponse,
)
from dclifford.core.error_handlers import create_error_response, format_error, with_error_handling

__all__ = [
    "settings",
    "get_setting",
    "get_settings_dict",
    "app_logger",
    "get_logger",
    "log_structured",
    "DCliffordException",
    "RejectedInputError",
    "ExpressionSyntaxError",
    "ClosureError",
    "InfeasibleError",
    "ConfigurationError",
    "ErrorDetail",
    "ErrorResponse",
    "create_error_response",
    "format_error",
    "with_error_handling",
]
