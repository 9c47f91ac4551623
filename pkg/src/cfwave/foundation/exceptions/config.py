"""
Configuration-related exception classes.

This module provides exceptions for loading and validating run
configuration files and command-line overrides.
"""

from typing import Any

from .base import CFWaveError


class ConfigError(CFWaveError):
    """
    Base class for all configuration-related errors.

    Covers missing files, TOML syntax errors and unresolved placeholders.

    Additional Context Fields:
        config_file: Configuration file path
        line: Line number reported by the TOML decoder (when known)
        column: Column number reported by the TOML decoder (when known)

    Example:
        ```python
        raise ConfigError(
            error_code="CFG-002",
            module="config.manager",
            message="Failed to parse configuration file",
            config_file="runs/table1.toml",
            line=4,
        )
        ```
    """

    def __init__(
        self,
        error_code: str,
        module: str,
        message: str,
        config_file: str | None = None,
        **context: Any,
    ) -> None:
        super().__init__(
            error_code=error_code,
            module=module,
            message=message,
            config_file=config_file,
            **context,
        )


class SchemaError(ConfigError):
    """
    Raised when configuration fails schema validation.

    Additional Context Fields:
        schema_field: Key that failed validation
        expected_type: Expected type or constraint
        validation_error: Underlying pydantic message

    Example:
        ```python
        raise SchemaError(
            error_code="CFG-004",
            module="config.manager",
            message="Configuration validation failed",
            schema_field="h",
            expected_type="float > 0",
        )
        ```
    """

    def __init__(
        self,
        error_code: str,
        module: str,
        message: str,
        schema_field: str | None = None,
        expected_type: str | None = None,
        **context: Any,
    ) -> None:
        super().__init__(
            error_code=error_code,
            module=module,
            message=message,
            schema_field=schema_field,
            expected_type=expected_type,
            **context,
        )
