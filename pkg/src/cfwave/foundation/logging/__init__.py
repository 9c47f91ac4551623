"""
cfwave logging framework.

- dictConfig-based setup with a stderr console handler
- optional rotating text and JSON file logs
- colourised console output on terminals
- structured ``extra`` fields preserved in JSON logs

Quick Start:
    ```python
    from cfwave.foundation.logging import setup_logging, get_logger

    setup_logging(level="INFO")
    logger = get_logger(__name__)
    logger.info("channel solved", extra={"channel": "k=0.5,l=0,S=0"})
    ```
"""

from .config import (
    DEFAULT_LOG_CONFIG,
    build_log_config,
    get_logger,
    set_log_level,
    setup_logging,
    shutdown_logging,
)
from .formatters import ConsoleFormatter, FileFormatter, JsonFormatter
from .handlers import RotatingFileHandlerWrapper

__all__ = [
    # Configuration
    "setup_logging",
    "build_log_config",
    "get_logger",
    "set_log_level",
    "shutdown_logging",
    "DEFAULT_LOG_CONFIG",
    # Formatters
    "ConsoleFormatter",
    "FileFormatter",
    "JsonFormatter",
    # Handlers
    "RotatingFileHandlerWrapper",
]
