"""
Steplength sensitivity of a solver's phase shift.
"""

import math
from collections.abc import Sequence
from typing import Annotated

import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, model_validator

from cfwave.foundation.config import NumericsConfig, SolverId
from cfwave.foundation.exceptions import DomainError
from cfwave.foundation.logging import get_logger
from cfwave.potentials import ChannelSpec

logger = get_logger(__name__)

MAX_DIGITS = 15
"""Stable digits reported when every step gives the same phase"""


def stable_digits(deltas: Sequence[float], spread: float) -> int:
    """Significant figures shared by the phases: floor(log10(|mean| / spread)), clipped to [0, 15]."""
    if spread == 0.0:
        return MAX_DIGITS
    scale = abs(sum(deltas) / len(deltas))
    if scale == 0.0:
        return 0
    return max(0, min(MAX_DIGITS, math.floor(math.log10(scale / spread))))


class SensitivityReport(BaseModel):
    """
    Phase shifts of one channel and solver across base steps.

    Attributes:
        channel: Scattering channel
        solver: Solver that produced the phases
        h_values: Base steps (a.u.)
        deltas: Phase shift per step (rad)
        converged: Convergence flag per step
        spread: max(delta) - min(delta)
        stable_digits: Significant figures unaffected by the step changes

    Example:
        ```python
        report = steplength_sensitivity(ChannelSpec(k=0.01), SolverId.KFTEE, [0.0048, 0.006, 0.0072])
        report.stable_digits  # >= 4
        report.to_dataframe()
        ```
    """

    channel: ChannelSpec
    solver: SolverId
    h_values: tuple[float, ...]
    deltas: tuple[float, ...]
    converged: tuple[bool, ...]
    spread: Annotated[float, Field(ge=0)]
    stable_digits: Annotated[int, Field(ge=0, le=MAX_DIGITS)]

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_spread(self) -> "SensitivityReport":
        """One phase per step, spread equal to max - min."""
        if not len(self.h_values) == len(self.deltas) == len(self.converged):
            raise ValueError("h_values, deltas and converged must have the same length")
        expected = max(self.deltas) - min(self.deltas)
        if not math.isclose(self.spread, expected, rel_tol=1e-12, abs_tol=1e-15):
            raise ValueError(f"spread {self.spread} differs from max - min = {expected}")
        return self

    def to_dataframe(self) -> pd.DataFrame:
        """One row per step: k, l, S, solver, h, delta, converged."""
        return pd.DataFrame(
            {
                "k": self.channel.k,
                "l": self.channel.l,
                "S": self.channel.S,
                "solver": self.solver.value,
                "h": list(self.h_values),
                "delta": list(self.deltas),
                "converged": list(self.converged),
            }
        )


def steplength_sensitivity(
    channel: ChannelSpec,
    solver: SolverId | str,
    h_values: Sequence[float],
    numerics: NumericsConfig | None = None,
) -> SensitivityReport:
    """
    Run ``solver`` once per base step and report how much the phase moves.

    Args:
        channel: Scattering channel
        solver: Solver identifier
        h_values: Base steps; at least one
        numerics: Settings shared by every run (``h`` is replaced)

    Raises:
        DomainError: If ``h_values`` is empty
    """
    # the dispatcher imports the baseline solvers from this package
    from cfwave.solvers import run_solver

    solver = SolverId(solver)
    if not h_values:
        raise DomainError(
            error_code="NUM-001",
            module="baselines.sensitivity",
            message="At least one base step is required",
            argument="h_values",
        )
    numerics = numerics or NumericsConfig()

    results = [run_solver(channel, solver, numerics.model_copy(update={"h": h})) for h in h_values]
    deltas = tuple(result.delta for result in results)
    spread = max(deltas) - min(deltas)
    report = SensitivityReport(
        channel=channel,
        solver=solver,
        h_values=tuple(float(h) for h in h_values),
        deltas=deltas,
        converged=tuple(result.converged for result in results),
        spread=spread,
        stable_digits=stable_digits(deltas, spread),
    )
    logger.info(
        "steplength sensitivity",
        extra={"channel": channel.label, "solver": solver.value, "spread": spread, "digits": report.stable_digits},
    )
    return report
