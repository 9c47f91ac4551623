"""
Logging configuration for cfwave.

Centralized setup through ``logging.config.dictConfig``. The console handler
writes to stderr so that CSV/JSON results on stdout stay clean; the rotating
text and JSON file handlers are attached only when a log directory is given.
"""

import copy
import logging
import logging.config
from pathlib import Path
from typing import Any

_FORMATTERS = "cfwave.foundation.logging.formatters"
_HANDLERS = "cfwave.foundation.logging.handlers"

DEFAULT_LOG_CONFIG: dict[str, Any] = {
    "version": 1,
    "disable_existing_loggers": False,
    "formatters": {
        "console": {
            "()": f"{_FORMATTERS}.ConsoleFormatter",
            "fmt": "%(asctime)s | %(levelname)-8s | %(name)s | %(message)s",
            "datefmt": "%H:%M:%S",
        },
        "file": {
            "()": f"{_FORMATTERS}.FileFormatter",
            "fmt": "%(asctime)s | %(levelname)-8s | %(name)s | %(funcName)s:%(lineno)d | %(message)s",
        },
        "json": {
            "()": f"{_FORMATTERS}.JsonFormatter",
        },
    },
    "handlers": {
        "console": {
            "class": "logging.StreamHandler",
            "level": "WARNING",
            "formatter": "console",
            "stream": "ext://sys.stderr",
        },
    },
    "loggers": {
        "cfwave": {
            "level": "DEBUG",
            "handlers": ["console"],
            "propagate": False,
        },
    },
    "root": {
        "level": "WARNING",
        "handlers": ["console"],
    },
}

_FILE_HANDLERS: dict[str, dict[str, Any]] = {
    "file": {
        "()": f"{_HANDLERS}.RotatingFileHandlerWrapper",
        "level": "DEBUG",
        "formatter": "file",
        "filename": "cfwave.log",
        "maxBytes": 10485760,  # 10MB
        "backupCount": 3,
    },
    "json_file": {
        "()": f"{_HANDLERS}.RotatingFileHandlerWrapper",
        "level": "DEBUG",
        "formatter": "json",
        "filename": "cfwave.json",
        "maxBytes": 10485760,  # 10MB
        "backupCount": 3,
    },
}


def build_log_config(
    level: str | int = "WARNING",
    log_dir: str | Path | None = None,
) -> dict[str, Any]:
    """
    Build a dictConfig mapping from the defaults.

    Args:
        level: Console level ("DEBUG", "INFO", ...)
        log_dir: Directory for the rotating text and JSON logs; None keeps
            console logging only

    Returns:
        A fresh configuration dictionary (the defaults are never mutated)
    """
    config = copy.deepcopy(DEFAULT_LOG_CONFIG)
    if isinstance(level, int):
        level = logging.getLevelName(level)
    config["handlers"]["console"]["level"] = str(level).upper()

    if log_dir is not None:
        log_path = Path(log_dir)
        for name, handler in _FILE_HANDLERS.items():
            entry = copy.deepcopy(handler)
            entry["filename"] = str(log_path / entry["filename"])
            config["handlers"][name] = entry
            config["loggers"]["cfwave"]["handlers"].append(name)
    return config


def setup_logging(
    config: dict[str, Any] | None = None,
    log_dir: str | Path | None = None,
    level: str | int = "WARNING",
) -> None:
    """
    Configure the logging system using dictConfig.

    Args:
        config: Full dictConfig mapping; when None one is built with
            ``build_log_config(level, log_dir)``
        log_dir: Directory for file logs (created if missing). With an explicit
            ``config``, relative handler filenames are moved into it.
        level: Console level used when ``config`` is None

    Example:
        ```python
        from cfwave.foundation.logging import setup_logging, get_logger

        setup_logging(level="INFO", log_dir="logs")
        get_logger(__name__).info("sweep started", extra={"rows": 30})
        ```
    """
    if config is None:
        config = build_log_config(level, log_dir)
    else:
        config = copy.deepcopy(config)
        if log_dir is not None:
            log_path = Path(log_dir)
            for handler_config in config.get("handlers", {}).values():
                if "filename" in handler_config:
                    filename = Path(handler_config["filename"])
                    if not filename.is_absolute():
                        handler_config["filename"] = str(log_path / filename.name)

    if log_dir is not None:
        Path(log_dir).mkdir(parents=True, exist_ok=True)

    logging.config.dictConfig(config)


def get_logger(name: str) -> logging.Logger:
    """Return the logger for ``name`` (normally the caller's ``__name__``)."""
    return logging.getLogger(name)


def set_log_level(level: str | int, logger_name: str | None = None) -> None:
    """
    Change the level of one logger (the root logger when ``logger_name`` is None).

    Example:
        ```python
        set_log_level("DEBUG", "cfwave.canonical")
        ```
    """
    if isinstance(level, str):
        level = getattr(logging, level.upper())
    logging.getLogger(logger_name).setLevel(level)


def shutdown_logging() -> None:
    """Flush and close every handler; call before process exit."""
    logging.shutdown()
