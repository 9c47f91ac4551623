"""
cfwave configuration.

Flat TOML run files validated by pydantic, with ``${env:VAR}`` placeholders
and command-line overrides.

Quick Start:
    ```python
    from cfwave.foundation.config import ConfigManager, NumericsConfig

    config = ConfigManager("config/base.toml").load(overrides={"k": [0.5]})
    numerics: NumericsConfig = config.to_numerics()
    ```
"""

from .manager import CONFIG_ENV_VAR, ConfigManager
from .models import NumericsConfig, OriginMode, OutputFormat, RatioMode, RunConfig, SolverId

__all__ = [
    # Manager
    "ConfigManager",
    "CONFIG_ENV_VAR",
    # Models
    "NumericsConfig",
    "RunConfig",
    # Enums
    "SolverId",
    "OriginMode",
    "RatioMode",
    "OutputFormat",
]
