"""
Configuration manager for cfwave runs.

Loads a flat TOML run file, resolves environment placeholders, overlays
command-line overrides and validates the result as a ``RunConfig``.
"""

import os
import re
from pathlib import Path
from typing import Any

try:
    import tomllib  # Python 3.11+
except ImportError:
    import tomli as tomllib  # Fallback for older Python

from pydantic import ValidationError

from cfwave.foundation.exceptions import ConfigError, SchemaError

from .models import RunConfig

CONFIG_ENV_VAR = "CFWAVE_CONFIG"

_ENV_PATTERN = re.compile(r"\$\{env:([A-Z_][A-Z0-9_]*)\}")
_POSITION_PATTERN = re.compile(r"at line (\d+), column (\d+)")


class ConfigManager:
    """
    Builds validated run configurations.

    Precedence (lowest to highest): model defaults, the TOML file,
    command-line overrides. The file path defaults to ``$CFWAVE_CONFIG``.

    Example:
        ```python
        from cfwave.foundation.config import ConfigManager

        manager = ConfigManager("runs/table1.toml")
        config = manager.load(overrides={"jobs": 4, "h": [0.004, 0.006]})
        numerics = config.to_numerics()
        ```
    """

    def __init__(self, config_path: Path | str | None = None) -> None:
        """
        Initialize the configuration manager.

        Args:
            config_path: TOML run file; falls back to ``$CFWAVE_CONFIG``,
                then to defaults only
        """
        if config_path is None:
            config_path = os.environ.get(CONFIG_ENV_VAR) or None
        self.config_path = Path(config_path) if config_path is not None else None
        self.config: RunConfig | None = None

    def load(self, overrides: dict[str, Any] | None = None) -> RunConfig:
        """
        Load and validate the run configuration.

        Args:
            overrides: Values that win over the file; ``None`` entries are
                ignored so unset command-line flags can be passed through

        Returns:
            Validated RunConfig

        Raises:
            ConfigError: If the file is missing, malformed or references an
                unset environment variable
            SchemaError: If a key is unknown or a value fails validation
        """
        values = self.read_file() if self.config_path is not None else {}
        values = self._resolve_placeholders(values)
        values.update({key: value for key, value in (overrides or {}).items() if value is not None})

        try:
            self.config = RunConfig(**values)
        except ValidationError as e:
            first = e.errors()[0]
            field = ".".join(str(part) for part in first["loc"]) or None
            raise SchemaError(
                error_code="CFG-004",
                module="config.manager",
                message=f"Invalid configuration value for {field!r}: {first['msg']}",
                schema_field=field,
                expected_type=first["type"],
                config_file=str(self.config_path) if self.config_path else None,
                validation_error=str(e),
            ) from e

        return self.config

    def read_file(self) -> dict[str, Any]:
        """
        Parse the TOML run file into a flat dictionary.

        Raises:
            ConfigError: CFG-001 (missing), CFG-002 (syntax), CFG-005 (nested tables)
        """
        assert self.config_path is not None
        path = self.config_path
        if not path.is_file():
            raise ConfigError(
                error_code="CFG-001",
                module="config.manager",
                message=f"Configuration file not found: {path}",
                config_file=str(path),
            )

        try:
            with open(path, "rb") as f:
                data = tomllib.load(f)
        except tomllib.TOMLDecodeError as e:
            line, column = _decode_position(e)
            raise ConfigError(
                error_code="CFG-002",
                module="config.manager",
                message=f"Failed to parse configuration file: {e}",
                config_file=str(path),
                line=line,
                column=column,
            ) from e

        nested = [key for key, value in data.items() if isinstance(value, dict)]
        if nested:
            raise ConfigError(
                error_code="CFG-005",
                module="config.manager",
                message=f"Run files are flat key = value lists; found tables: {nested}",
                config_file=str(path),
            )
        return data

    def get_config(self) -> RunConfig:
        """
        Return the configuration produced by the last ``load``.

        Raises:
            ConfigError: If ``load`` has not been called
        """
        if self.config is None:
            raise ConfigError(
                error_code="CFG-006",
                module="config.manager",
                message="Configuration not loaded. Call load() first.",
            )
        return self.config

    def _resolve_placeholders(self, values: dict[str, Any]) -> dict[str, Any]:
        """Replace ``${env:VAR}`` placeholders in string values (and lists of them)."""

        def substitute(match: re.Match[str]) -> str:
            name = match.group(1)
            if name not in os.environ:
                raise ConfigError(
                    error_code="CFG-003",
                    module="config.manager",
                    message=f"Environment variable not set: {name}",
                    config_file=str(self.config_path) if self.config_path else None,
                    variable=name,
                )
            return os.environ[name]

        def resolve_value(value: Any) -> Any:
            if isinstance(value, str):
                return _ENV_PATTERN.sub(substitute, value)
            if isinstance(value, list):
                return [resolve_value(item) for item in value]
            return value

        return {key: resolve_value(value) for key, value in values.items()}


def _decode_position(error: Exception) -> tuple[int | None, int | None]:
    """Line and column of a TOML decode error, when the decoder reports them."""
    line = getattr(error, "lineno", None)
    column = getattr(error, "colno", None)
    if line is None:
        match = _POSITION_PATTERN.search(str(error))
        if match:
            line, column = int(match.group(1)), int(match.group(2))
    return line, column
