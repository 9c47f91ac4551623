"""
Adaptive integration of the 2x2 coupled second-order system

    g'' + V(r) g = s W(r),    g = (g1, g2),

rewritten as four first-order equations per solution column so that values
and derivatives come out together. Several columns (independent initial
data, each with or without the source term) are integrated in one call.
"""

from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum
from typing import Protocol

import numpy as np
from numpy.typing import ArrayLike, NDArray
from scipy.integrate import solve_ivp

from cfwave.foundation.exceptions import SingularityError, StepSizeError
from cfwave.foundation.logging import get_logger

from .grid import RadialGrid

logger = get_logger(__name__)


class Direction(str, Enum):
    """Integration direction relative to the start radius."""

    OUTWARD = "outward"
    INWARD = "inward"


class CoefficientSource(Protocol):
    """Anything that returns (V, W) with shapes (2, 2) and (2,) at a radius."""

    def evaluate(self, r: ArrayLike) -> tuple[NDArray[np.float64], NDArray[np.float64]]: ...


@dataclass(frozen=True, eq=False)
class SampledSolution:
    """
    Solution columns sampled on output radii (ascending).

    Attributes:
        r: Output radii, ascending
        values: (n, 2, m) array of (g1, g2) per column
        derivatives: (n, 2, m) array of (g1', g2') per column
        direction: Direction of integration
        r0: Start radius
    """

    r: NDArray[np.float64]
    values: NDArray[np.float64]
    derivatives: NDArray[np.float64]
    direction: Direction
    r0: float

    @property
    def columns(self) -> int:
        return self.values.shape[-1]

    def index(self, radius: float) -> int:
        """Index of the output radius closest to ``radius``."""
        return int(np.argmin(np.abs(self.r - radius)))

    def column(self, j: int) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """(values, derivatives) of column ``j``, each of shape (n, 2)."""
        return self.values[:, :, j], self.derivatives[:, :, j]


def output_radii(
    grid: RadialGrid,
    r0: float,
    direction: Direction,
    r_end: float | None = None,
    extra_points: Sequence[float] = (),
) -> NDArray[np.float64]:
    """
    Radii at which a solution started at ``r0`` is reported, in integration order.

    Outward runs stop at the last grid point (or ``r_end``), inward runs at
    ``grid.r_min`` (or ``r_end``); both include ``r0`` and ``r_end``.
    """
    tol = 1e-12 * max(1.0, abs(r0))
    extra = np.asarray(extra_points, dtype=float)
    if direction is Direction.OUTWARD:
        end = grid.r_max if r_end is None else r_end
        points = np.concatenate((grid.r, extra))
        points = points[(points > r0 + tol) & (points <= end + tol)]
        radii = np.unique(np.concatenate(([r0], points, [end])))
    else:
        end = grid.r_min if r_end is None else r_end
        points = np.concatenate((grid.r, extra))
        points = points[(points < r0 - tol) & (points >= end - tol)]
        radii = np.unique(np.concatenate(([r0], points, [end])))[::-1]
    return radii


def integrate_pair(
    coeffs: CoefficientSource,
    y0: ArrayLike,
    grid: RadialGrid,
    r0: float,
    direction: Direction | str = Direction.OUTWARD,
    *,
    inhomogeneous: bool | Sequence[bool] = False,
    r_end: float | None = None,
    extra_points: Sequence[float] = (),
    rtol: float = 1e-11,
    atol: float = 1e-14,
    method: str = "DOP853",
) -> SampledSolution:
    """
    Integrate one or more solution columns from ``r0`` across the grid.

    Args:
        coeffs: Coefficient source (V, W)
        y0: Initial (g1, g1', g2, g2') at r0, shape (4,) or (4, m)
        grid: Mesh supplying the output radii
        r0: Start radius
        direction: Outward to the grid end or inward to ``grid.r_min``
        inhomogeneous: Whether the source term acts, per column or for all
        r_end: Override of the final radius
        extra_points: Additional output radii (e.g. origin-limit epsilons)
        rtol, atol: Tolerances of the embedded error estimate
        method: solve_ivp method

    Returns:
        SampledSolution on the output radii (ascending)

    Raises:
        SingularityError: If V or W is not finite at a visited radius
        StepSizeError: If the integrator fails to meet the tolerance

    Example:
        ```python
        sol = integrate_pair(coeffs, [0, 1, 0, 0], grid, r0=grid.snap(1.0))
        g1, dg1 = sol.values[:, 0, 0], sol.derivatives[:, 0, 0]
        ```
    """
    direction = Direction(direction)
    start = np.asarray(y0, dtype=float)
    if start.ndim == 1:
        start = start[:, None]
    m = start.shape[1]
    flags = np.broadcast_to(np.asarray(inhomogeneous, dtype=float), (m,)).copy()

    radii = output_radii(grid, r0, direction, r_end, extra_points)

    def rhs(r: float, y: NDArray[np.float64]) -> NDArray[np.float64]:
        V, W = coeffs.evaluate(r)
        if not (np.all(np.isfinite(V)) and np.all(np.isfinite(W))):
            raise SingularityError(
                error_code="NUM-004",
                module="ode.integrators",
                message=f"Non-finite coefficient at r = {r:.6e}",
                radius=float(r),
            )
        state = y.reshape(4, m)
        g = state[[0, 2]]
        accel = np.outer(W, flags) - V @ g
        return np.stack((state[1], accel[0], state[3], accel[1])).ravel()

    sol = solve_ivp(
        rhs,
        (float(radii[0]), float(radii[-1])),
        start.ravel(),
        method=method,
        t_eval=radii,
        rtol=rtol,
        atol=atol,
    )
    if sol.status != 0:
        raise StepSizeError(
            error_code="NUM-003",
            module="ode.integrators",
            message=f"Integration from r0 = {r0} failed: {sol.message}",
            r0=r0,
            direction=direction.value,
        )
    logger.debug(
        "integrated %d column(s) %s from r0=%.4f",
        m,
        direction.value,
        r0,
        extra={"nfev": int(sol.nfev), "points": int(sol.t.size)},
    )

    states = sol.y.reshape(4, m, -1).transpose(2, 0, 1)
    if direction is Direction.INWARD:
        states = states[::-1]
    return SampledSolution(
        r=np.sort(sol.t),
        values=np.ascontiguousarray(states[:, [0, 2], :]),
        derivatives=np.ascontiguousarray(states[:, [1, 3], :]),
        direction=direction,
        r0=float(r0),
    )
