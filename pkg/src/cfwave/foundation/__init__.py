"""
cfwave foundation layer: exceptions, logging, configuration and parsing helpers.

Quick Start:
    ```python
    from cfwave.foundation import ConfigManager, setup_logging, NoPlateauError

    setup_logging(level="INFO")
    config = ConfigManager("config/base.toml").load({"k": [0.5]})
    numerics = config.to_numerics()
    ```
"""

# Configuration Management
from .config import (
    CONFIG_ENV_VAR,
    ConfigManager,
    NumericsConfig,
    OriginMode,
    OutputFormat,
    RatioMode,
    RunConfig,
    SolverId,
)

# Exception Handling
from .exceptions import (
    AmbiguousBranchError,
    CFWaveError,
    ConfigError,
    ConvergenceError,
    DomainError,
    NoPlateauError,
    NumericalError,
    OverflowGuardError,
    ResonanceDenominatorError,
    SchemaError,
    SingularityError,
    SingularMatrixError,
    StepSizeError,
)

# Logging System
from .logging import get_logger, setup_logging

# Utility Functions - Parsing
from .utils import parse_int_spec, parse_k_range, parse_spin, validate_wavenumber

__all__ = [
    # Configuration
    "ConfigManager",
    "CONFIG_ENV_VAR",
    "NumericsConfig",
    "RunConfig",
    "SolverId",
    "OriginMode",
    "RatioMode",
    "OutputFormat",
    # Exceptions
    "CFWaveError",
    "ConfigError",
    "SchemaError",
    "NumericalError",
    "DomainError",
    "OverflowGuardError",
    "StepSizeError",
    "SingularityError",
    "ConvergenceError",
    "SingularMatrixError",
    "NoPlateauError",
    "ResonanceDenominatorError",
    "AmbiguousBranchError",
    # Logging
    "setup_logging",
    "get_logger",
    # Utilities
    "parse_k_range",
    "parse_int_spec",
    "parse_spin",
    "validate_wavenumber",
]
