"""
cfwave exception hierarchy.

Every error raised by the library carries a standardized error code, the
module it came from and structured context for logging and reporting.

Exception Hierarchy:
    CFWaveError
    ├── ConfigError
    │   └── SchemaError
    └── NumericalError
        ├── DomainError
        ├── OverflowGuardError
        ├── StepSizeError
        ├── SingularityError
        ├── ConvergenceError
        ├── SingularMatrixError
        ├── NoPlateauError
        ├── ResonanceDenominatorError
        └── AmbiguousBranchError

Error codes:
    CFG-001 .. CFG-006   configuration loading and validation
    NUM-001              domain error
    NUM-002              Riccati overflow guard
    NUM-003 / NUM-004    integrator step size / singular coefficient
    NUM-005 / NUM-006    origin limit convergence / singular beta
    NUM-007              no plateau (D or Q)
    NUM-008              resonance denominator
    NUM-009              ambiguous branch

Usage:
    ```python
    from cfwave.foundation.exceptions import NoPlateauError

    raise NoPlateauError(
        error_code="NUM-007",
        module="phaseshift.extraction",
        message="Q(r) did not settle over the matching window",
        quantity="Q",
        spread=3.2e-7,
        tolerance=1e-8,
    )
    ```
"""

# Base exception
from .base import CFWaveError

# Configuration exceptions
from .config import ConfigError, SchemaError

# Numerical exceptions
from .numerics import (
    AmbiguousBranchError,
    ConvergenceError,
    DomainError,
    NoPlateauError,
    NumericalError,
    OverflowGuardError,
    ResonanceDenominatorError,
    SingularityError,
    SingularMatrixError,
    StepSizeError,
)

__all__ = [
    # Base
    "CFWaveError",
    # Config
    "ConfigError",
    "SchemaError",
    # Numerical
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
]
