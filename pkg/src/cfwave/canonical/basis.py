"""
Canonical basis: alpha, beta (2x2) and sigma (2-vector) started at r0 with

    alpha(r0) = I, alpha'(r0) = 0, beta(r0) = 0, beta'(r0) = I,
    sigma(r0) = sigma'(r0) = 0 (sigma solves the inhomogeneous system),

integrated inward to r_min (through the origin-limit radii) and outward to
the end of the grid.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import NDArray

from cfwave.foundation.config import NumericsConfig
from cfwave.foundation.logging import get_logger
from cfwave.ode import Direction, RadialGrid, integrate_pair
from cfwave.ode.integrators import CoefficientSource
from cfwave.potentials import ChannelSpec

logger = get_logger(__name__)

# Columns: alpha_1, alpha_2, beta_1, beta_2, sigma; rows: (g1, g1', g2, g2')
_INITIAL_STATE = np.array(
    [
        [1.0, 0.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0, 0.0],
    ]
)
_SOURCE_COLUMNS = (False, False, False, False, True)


@dataclass(frozen=True, eq=False)
class CanonicalBasis:
    """
    Canonical functions sampled on one ascending radius array.

    ``values``/``derivatives`` have shape (n, 2, 5): rows are the (F, G)
    components, columns alpha_1, alpha_2, beta_1, beta_2, sigma.
    ``on_grid`` marks mesh points (the origin-limit radii are extra samples).
    """

    channel: ChannelSpec
    r: NDArray[np.float64]
    values: NDArray[np.float64]
    derivatives: NDArray[np.float64]
    r0: float
    on_grid: NDArray[np.bool_]

    @property
    def r0_index(self) -> int:
        return int(np.argmin(np.abs(self.r - self.r0)))

    def index(self, radius: float) -> int:
        """Index of the sample closest to ``radius``."""
        return int(np.argmin(np.abs(self.r - radius)))

    @property
    def alpha(self) -> NDArray[np.float64]:
        return self.values[:, :, 0:2]

    @property
    def alpha_prime(self) -> NDArray[np.float64]:
        return self.derivatives[:, :, 0:2]

    @property
    def beta(self) -> NDArray[np.float64]:
        return self.values[:, :, 2:4]

    @property
    def beta_prime(self) -> NDArray[np.float64]:
        return self.derivatives[:, :, 2:4]

    @property
    def sigma(self) -> NDArray[np.float64]:
        return self.values[:, :, 4]

    @property
    def sigma_prime(self) -> NDArray[np.float64]:
        return self.derivatives[:, :, 4]

    def fundamental(self, i: int) -> NDArray[np.float64]:
        """4x4 matrix [[alpha, beta], [alpha', beta']] at sample ``i`` (determinant 1)."""
        return np.block(
            [
                [self.alpha[i], self.beta[i]],
                [self.alpha_prime[i], self.beta_prime[i]],
            ]
        )


def build_basis(
    coeffs: CoefficientSource,
    channel: ChannelSpec,
    grid: RadialGrid,
    r0: float,
    numerics: NumericsConfig | None = None,
) -> CanonicalBasis:
    """
    Integrate the five canonical columns from r0 in both directions.

    Args:
        coeffs: Coupled-system coefficients
        channel: Channel the coefficients belong to
        grid: Mesh; r0 is snapped to its nearest point
        r0: Start radius
        numerics: Tolerances and origin-limit radii (defaults when None)

    Returns:
        CanonicalBasis on [r_min, r_max]

    Raises:
        SingularityError, StepSizeError: Propagated from the integrator
    """
    numerics = numerics or NumericsConfig()
    start = grid.snap(r0)
    options = {"rtol": numerics.rtol, "atol": numerics.atol, "inhomogeneous": _SOURCE_COLUMNS}

    inward = integrate_pair(
        coeffs,
        _INITIAL_STATE,
        grid,
        start,
        Direction.INWARD,
        r_end=numerics.r_min,
        extra_points=numerics.epsilons,
        **options,
    )
    outward = integrate_pair(coeffs, _INITIAL_STATE, grid, start, Direction.OUTWARD, **options)

    # inward.r ends with r0, outward.r starts with it
    r = np.concatenate((inward.r[:-1], outward.r))
    values = np.concatenate((inward.values[:-1], outward.values))
    derivatives = np.concatenate((inward.derivatives[:-1], outward.derivatives))

    position = np.clip(np.searchsorted(grid.r, r), 0, len(grid) - 1)
    on_grid = np.isclose(grid.r[position], r, rtol=0, atol=1e-12)

    logger.debug(
        "canonical basis built",
        extra={"channel": channel.label, "r0": start, "samples": int(r.size)},
    )
    return CanonicalBasis(
        channel=channel,
        r=r,
        values=values,
        derivatives=derivatives,
        r0=start,
        on_grid=on_grid,
    )
