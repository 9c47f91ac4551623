"""
Numerical exception classes.

This module provides the exceptions raised by the special functions,
integrators, canonical-function pipeline and phase-shift extraction.
"""

from typing import Any

from .base import CFWaveError


class NumericalError(CFWaveError):
    """
    Base class for all numerical failures.

    Additional Context Fields:
        channel: Short channel label "k=..,l=..,S=.." when the failure
            belongs to a scattering channel

    Example:
        ```python
        raise NumericalError(
            error_code="NUM-000",
            module="solvers",
            message="Solver failed",
            channel="k=0.5,l=0,S=0",
        )
        ```
    """

    def __init__(
        self,
        error_code: str,
        module: str,
        message: str,
        channel: str | None = None,
        **context: Any,
    ) -> None:
        super().__init__(
            error_code=error_code,
            module=module,
            message=message,
            channel=channel,
            **context,
        )


class DomainError(NumericalError, ValueError):
    """
    Raised when a function is evaluated outside its domain.

    Additional Context Fields:
        argument: Name of the offending argument
        value: Offending value (or its minimum for arrays)
    """

    def __init__(
        self,
        error_code: str,
        module: str,
        message: str,
        argument: str | None = None,
        value: float | None = None,
        **context: Any,
    ) -> None:
        super().__init__(
            error_code=error_code,
            module=module,
            message=message,
            argument=argument,
            value=value,
            **context,
        )


class OverflowGuardError(NumericalError):
    """
    Raised when an irregular Riccati function is not representable.

    Additional Context Fields:
        l: Partial wave at which the overflow occurred
        rho: Smallest argument involved
    """

    def __init__(
        self,
        error_code: str,
        module: str,
        message: str,
        l: int | None = None,
        rho: float | None = None,
        **context: Any,
    ) -> None:
        super().__init__(
            error_code=error_code, module=module, message=message, l=l, rho=rho, **context
        )


class StepSizeError(NumericalError):
    """Raised when the adaptive integrator cannot meet its tolerance."""


class SingularityError(NumericalError):
    """
    Raised when a coefficient evaluates to a non-finite value.

    Additional Context Fields:
        radius: Radius at which the coefficient was evaluated
    """

    def __init__(
        self,
        error_code: str,
        module: str,
        message: str,
        radius: float | None = None,
        **context: Any,
    ) -> None:
        super().__init__(
            error_code=error_code, module=module, message=message, radius=radius, **context
        )


class ConvergenceError(NumericalError):
    """
    Raised when the origin limit of the canonical functions does not settle.

    Additional Context Fields:
        epsilon_trace: List of (epsilon, relative change) pairs
        tolerance: Requested tolerance
    """

    def __init__(
        self,
        error_code: str,
        module: str,
        message: str,
        epsilon_trace: list[tuple[float, float]] | None = None,
        tolerance: float | None = None,
        **context: Any,
    ) -> None:
        super().__init__(
            error_code=error_code,
            module=module,
            message=message,
            epsilon_trace=epsilon_trace,
            tolerance=tolerance,
            **context,
        )


class SingularMatrixError(NumericalError):
    """
    Raised when the beta block (or its log-derivative form) cannot be inverted.

    Additional Context Fields:
        radius: Radius at which inversion failed
        condition: Condition number estimate
    """

    def __init__(
        self,
        error_code: str,
        module: str,
        message: str,
        radius: float | None = None,
        condition: float | None = None,
        **context: Any,
    ) -> None:
        super().__init__(
            error_code=error_code,
            module=module,
            message=message,
            radius=radius,
            condition=condition,
            **context,
        )


class NoPlateauError(NumericalError):
    """
    Raised when a ratio (D or Q) does not settle over its trailing window.

    Additional Context Fields:
        quantity: "D" or "Q"
        mode: Condition that fixed D (value or growth); D only
        spread: Measured window spread
        tolerance: Requested tolerance
        r_max: Outer radius of the grid used
    """

    def __init__(
        self,
        error_code: str,
        module: str,
        message: str,
        quantity: str | None = None,
        spread: float | None = None,
        tolerance: float | None = None,
        r_max: float | None = None,
        **context: Any,
    ) -> None:
        super().__init__(
            error_code=error_code,
            module=module,
            message=message,
            quantity=quantity,
            spread=spread,
            tolerance=tolerance,
            r_max=r_max,
            **context,
        )


class ResonanceDenominatorError(NumericalError):
    """
    Raised when 1 - (k^2 - E_10) J is too close to zero to determine A(k).

    Additional Context Fields:
        denominator: Value of the guarded denominator
    """

    def __init__(
        self,
        error_code: str,
        module: str,
        message: str,
        denominator: float | None = None,
        **context: Any,
    ) -> None:
        super().__init__(
            error_code=error_code,
            module=module,
            message=message,
            denominator=denominator,
            **context,
        )


class AmbiguousBranchError(NumericalError):
    """
    Raised when no matching radius lies clear of the nodes of f1.

    Additional Context Fields:
        window: (first, last) radius of the searched window
    """

    def __init__(
        self,
        error_code: str,
        module: str,
        message: str,
        window: tuple[float, float] | None = None,
        **context: Any,
    ) -> None:
        super().__init__(
            error_code=error_code, module=module, message=message, window=window, **context
        )
