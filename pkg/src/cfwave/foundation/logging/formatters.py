"""
Logging formatters for cfwave.

Console output is colourised when attached to a terminal, file output
carries millisecond UTC timestamps and call sites, and the JSON formatter
emits one object per record with any ``extra`` fields (channel labels,
plateau spreads, branch numbers) preserved as structured data.
"""

import json
import logging
import sys
from datetime import datetime, timezone
from typing import Any

# LogRecord attributes that are not user-supplied extras
_RESERVED_ATTRS = frozenset(
    {
        "name",
        "msg",
        "args",
        "created",
        "msecs",
        "levelname",
        "levelno",
        "pathname",
        "filename",
        "module",
        "exc_info",
        "exc_text",
        "stack_info",
        "lineno",
        "funcName",
        "processName",
        "process",
        "threadName",
        "thread",
        "taskName",
        "relativeCreated",
        "message",
    }
)


class Colors:
    """ANSI escape sequences used by the console formatter."""

    RESET = "\033[0m"
    DEBUG = "\033[36m"
    INFO = "\033[32m"
    WARNING = "\033[33m"
    ERROR = "\033[31m"
    CRITICAL = "\033[35m\033[1m"
    TIMESTAMP = "\033[90m"


class ConsoleFormatter(logging.Formatter):
    """
    Formatter that colourises level names and timestamps.

    Colour support is detected from ``sys.stderr`` (where the console handler
    writes) unless forced with ``use_colors``.
    """

    LEVEL_COLORS = {
        logging.DEBUG: Colors.DEBUG,
        logging.INFO: Colors.INFO,
        logging.WARNING: Colors.WARNING,
        logging.ERROR: Colors.ERROR,
        logging.CRITICAL: Colors.CRITICAL,
    }

    def __init__(
        self,
        fmt: str | None = None,
        datefmt: str | None = None,
        style: str = "%",
        use_colors: bool | None = None,
    ) -> None:
        super().__init__(fmt, datefmt, style)  # type: ignore[arg-type]
        if use_colors is None:
            self.use_colors = hasattr(sys.stderr, "isatty") and sys.stderr.isatty()
        else:
            self.use_colors = use_colors

    def format(self, record: logging.LogRecord) -> str:
        if not self.use_colors:
            return super().format(record)

        original = record.levelname
        color = self.LEVEL_COLORS.get(record.levelno, "")
        record.levelname = f"{color}{original}{Colors.RESET}"
        try:
            return super().format(record)
        finally:
            record.levelname = original

    def formatTime(self, record: logging.LogRecord, datefmt: str | None = None) -> str:
        timestamp = super().formatTime(record, datefmt)
        if self.use_colors:
            return f"{Colors.TIMESTAMP}{timestamp}{Colors.RESET}"
        return timestamp


class FileFormatter(logging.Formatter):
    """Formatter for log files: UTC timestamps with millisecond precision."""

    def formatTime(self, record: logging.LogRecord, datefmt: str | None = None) -> str:
        ct = datetime.fromtimestamp(record.created, tz=timezone.utc)
        s = ct.strftime(datefmt or "%Y-%m-%d %H:%M:%S")
        return f"{s}.{int(record.msecs):03d}"


class JsonFormatter(logging.Formatter):
    """
    Formatter that renders each record as a single-line JSON object.

    Output format:
        ```json
        {"timestamp": "2026-01-01T10:00:00.123000+00:00", "level": "DEBUG",
         "logger": "cfwave.canonical.solver", "message": "D plateau reached",
         "channel": "k=0.5,l=0,S=0", "spread": 3.1e-11}
        ```
    """

    def __init__(self, datefmt: str | None = None) -> None:
        super().__init__()
        self.datefmt = datefmt

    def format(self, record: logging.LogRecord) -> str:
        log_data: dict[str, Any] = {
            "timestamp": self.formatTime(record, self.datefmt),
            "level": record.levelname,
            "logger": record.name,
            "module": record.module,
            "function": record.funcName,
            "line": record.lineno,
            "message": record.getMessage(),
        }
        if record.processName and record.processName != "MainProcess":
            log_data["process"] = record.processName
        if record.exc_info:
            log_data["exception"] = self.formatException(record.exc_info)

        for key, value in record.__dict__.items():
            if key in _RESERVED_ATTRS:
                continue
            try:
                json.dumps(value)
                log_data[key] = value
            except (TypeError, ValueError):
                log_data[key] = str(value)

        return json.dumps(log_data, default=str)

    def formatTime(self, record: logging.LogRecord, datefmt: str | None = None) -> str:
        """Always ISO 8601 with timezone; ``datefmt`` is ignored."""
        return datetime.fromtimestamp(record.created, tz=timezone.utc).isoformat()
