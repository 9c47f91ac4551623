"""
Phase-shift result models.
"""

import math
from dataclasses import dataclass
from typing import Annotated, Any

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field, model_validator

from cfwave.foundation.config import SolverId
from cfwave.potentials import ChannelSpec

NORMALIZATION = math.sqrt(2.0 / math.pi)
"""Asymptotic amplitude of a continuum function normalized to delta(k - k')"""


class PhaseShiftResult(BaseModel):
    """
    Phase shift of one channel from one solver.

    Attributes:
        channel: Scattering channel
        solver: Solver that produced the result
        h: Base step of the mesh
        tan_delta: tan of the phase shift
        delta: Branch-resolved phase shift (rad)
        principal: Principal value in (-pi/2, pi/2]
        branch_n: Integer multiple of pi added to the principal value
        a_norm: Asymptotic amplitude of the normalized function
        scale: Factor applied to the raw solution to normalize it
        q_trace: Q(r) over the plateau window
        plateau_spread: Window spread of the phase (rad)
        tolerance: Spread tolerance the result was judged against
        converged: Whether the spread met the tolerance
        unstable: Solver-specific instability flag (Numerov baseline)
        r_max: Outer radius of the mesh used
        r_match: Radius used for branch matching

    Example:
        ```python
        result = run_solver(ChannelSpec(k=0.5, l=0, S=0), SolverId.KFTEE)
        result.delta  # ~1.168
        ```
    """

    channel: ChannelSpec
    solver: SolverId
    h: Annotated[float, Field(gt=0)]
    tan_delta: float
    delta: float
    principal: float
    branch_n: int = 0
    a_norm: float = NORMALIZATION
    scale: float = 1.0
    q_trace: tuple[float, ...] = ()
    plateau_spread: Annotated[float, Field(ge=0)] = 0.0
    tolerance: Annotated[float, Field(gt=0)] = 1e-8
    converged: bool = True
    unstable: bool = False
    r_max: float = 40.8
    r_match: float | None = None

    model_config = ConfigDict(frozen=True)

    @model_validator(mode="after")
    def validate_consistency(self) -> "PhaseShiftResult":
        """tan(delta) matches tan_delta; converged implies the spread met the tolerance."""
        if math.isfinite(self.delta):
            expected = math.tan(self.delta)
            if abs(expected - self.tan_delta) > 1e-9 * max(1.0, abs(self.tan_delta)):
                raise ValueError(f"tan(delta) = {expected} disagrees with tan_delta = {self.tan_delta}")
        if self.converged and self.plateau_spread > self.tolerance:
            raise ValueError("converged result with spread above tolerance")
        return self

    @property
    def label(self) -> str:
        return f"{self.channel.label},{self.solver.value},h={self.h:g}"

    def summary(self) -> dict[str, Any]:
        """Flat dictionary used for logging."""
        return {
            "channel": self.channel.label,
            "solver": self.solver.value,
            "h": self.h,
            "delta": self.delta,
            "branch": self.branch_n,
            "spread": self.plateau_spread,
            "converged": self.converged,
        }


@dataclass(frozen=True, eq=False)
class ContinuumWave:
    """
    Normalized continuum function on the mesh.

    f1 -> sqrt(2/pi) [s_l(kr) cos(delta) + c_l(kr) sin(delta)] at large r.
    ``f2``/``f2_prime`` hold the exchange overlap function (zero for
    single-channel solvers).
    """

    r: NDArray[np.float64]
    f1: NDArray[np.float64]
    f1_prime: NDArray[np.float64]
    f2: NDArray[np.float64]
    f2_prime: NDArray[np.float64]
    reliable: NDArray[np.bool_]

    @classmethod
    def single_channel(cls, r: NDArray[np.float64], f1: NDArray[np.float64], f1_prime: NDArray[np.float64]) -> "ContinuumWave":
        """Wave of a single-channel solver (f2 = 0, every sample reliable)."""
        zeros = np.zeros_like(f1)
        return cls(r, f1, f1_prime, zeros, zeros.copy(), np.ones_like(f1, dtype=bool))


@dataclass(frozen=True, eq=False)
class SolverOutput:
    """Phase-shift result together with the normalized wave it came from."""

    result: PhaseShiftResult
    wave: ContinuumWave | None = None
