"""
Logging handlers for cfwave.
"""

from logging.handlers import RotatingFileHandler
from pathlib import Path


class RotatingFileHandlerWrapper(RotatingFileHandler):
    """
    RotatingFileHandler that creates the parent directory of its log file.

    Used for both the text and the JSON log of a sweep; the JSON variant
    differs only by its formatter.

    Example:
        ```python
        handler = RotatingFileHandlerWrapper(
            filename="logs/cfwave.json",
            maxBytes=10485760,
            backupCount=3,
        )
        handler.setFormatter(JsonFormatter())
        ```
    """

    def __init__(
        self,
        filename: str,
        mode: str = "a",
        maxBytes: int = 0,
        backupCount: int = 0,
        encoding: str | None = "utf-8",
        delay: bool = False,
    ) -> None:
        Path(filename).parent.mkdir(parents=True, exist_ok=True)
        super().__init__(
            filename=filename,
            mode=mode,
            maxBytes=maxBytes,
            backupCount=backupCount,
            encoding=encoding,
            delay=delay,
        )
