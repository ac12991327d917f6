import logging
import os
import sys
from logging.handlers import RotatingFileHandler
from typing import Any, Dict, Optional

from dclifford.core.config import settings

_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

formatter = logging.Formatter(
    "%(asctime)s - %(name)s - %(levelname)s - %(message)s",
    datefmt="%Y-%m-%d %H:%M:%S",
)

# Package logger; stdout is reserved for command output
app_logger = logging.getLogger("dclifford")
app_logger.setLevel(getattr(logging, settings.log_level))
app_logger.propagate = False

console_handler = logging.StreamHandler(sys.stderr)
console_handler.setFormatter(formatter)
app_logger.addHandler(console_handler)

file_handler: Optional[RotatingFileHandler] = None
if settings.log_file:
    log_dir = os.path.dirname(settings.log_file)
    if log_dir and not os.path.exists(log_dir):
        os.makedirs(log_dir)

    # 10 MB per file, keep 5 backups
    file_handler = RotatingFileHandler(
        settings.log_file,
        maxBytes=10 * 1024 * 1024,
        backupCount=5,
    )
    file_handler.setFormatter(formatter)
    app_logger.addHandler(file_handler)


def get_logger(name: str, level: Optional[str] = None) -> logging.Logger:
    """Create a logger for a specific module.

    Children of the ``dclifford`` logger inherit its handlers, so only the
    level needs configuring here.

    Args:
        name: The name of the module (typically __name__)
        level: Optional log level override

    Returns:
        A configured logger instance
    """
    if not name.startswith("dclifford"):
        name = f"dclifford.{name}"
    logger = logging.getLogger(name)
    if level and level.upper() in _LEVELS:
        logger.setLevel(getattr(logging, level.upper()))
    return logger


def set_level(level: str) -> None:
    """Change the package log level at runtime (the CLI --log-level option)."""
    if level.upper() in _LEVELS:
        app_logger.setLevel(getattr(logging, level.upper()))


def log_structured(logger: logging.Logger, level: str, message: str, data: Dict[str, Any]) -> None:
    """Log a message with structured data.

    Args:
        logger: The logger instance
        level: The log level (debug, info, warning, error, critical)
        message: The log message
        data: Dictionary of structured data to include
    """
    method = getattr(logger, level.lower(), None)
    if method is None:
        method = logger.info
    method(f"{message} - {data}")
