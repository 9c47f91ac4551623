"""
Piecewise-uniform radial mesh.

Step h up to the first boundary, then 2h, 4h, 8h, ... per region. Each
boundary is snapped to an integer number of local steps from the previous
one, so every grid point of a coarse region is also reachable at the step of
that region. The origin is never a grid point.
"""

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from cfwave.foundation.config import NumericsConfig
from cfwave.foundation.exceptions import DomainError


@dataclass(frozen=True)
class Region:
    """One uniform region: grid indices [start, stop] with spacing ``step``."""

    start: int
    stop: int
    step: float


@dataclass(frozen=True, eq=False)
class RadialGrid:
    """
    Sampled radial mesh.

    Attributes:
        h: Base step of the innermost region
        r: Grid points, strictly increasing, first point h
        regions: Uniform regions (indices inclusive)
        r_min: Inner cutoff for inward integrations (not a grid point)

    Example:
        ```python
        grid = build_grid(0.006, (1.2, 4.8, 40.8, 184.8), r_max=40.8)
        grid.r[-1]        # 40.8
        grid.step_at(1.0) # 0.006
        ```
    """

    h: float
    r: NDArray[np.float64]
    regions: tuple[Region, ...]
    r_min: float = 1e-4
    boundaries: tuple[float, ...] = field(default=())

    def __len__(self) -> int:
        return len(self.r)

    @property
    def r_max(self) -> float:
        return float(self.r[-1])

    def nearest_index(self, radius: float) -> int:
        """Index of the grid point closest to ``radius``."""
        return int(np.argmin(np.abs(self.r - radius)))

    def snap(self, radius: float) -> float:
        """Nearest grid point."""
        return float(self.r[self.nearest_index(radius)])

    def step_at(self, radius: float) -> float:
        """Local step of the region containing ``radius`` (the outer one at a boundary)."""
        index = self.nearest_index(radius)
        for region in self.regions:
            if region.start <= index < region.stop:
                return region.step
        return self.regions[-1].step

    def with_origin(self) -> NDArray[np.float64]:
        """Grid points with r = 0 prepended, for quadrature."""
        return np.concatenate(([0.0], self.r))


def build_grid(
    h: float,
    boundaries: tuple[float, ...] = (1.2, 4.8, 40.8, 184.8),
    r_max: float = 40.8,
    r_min: float = 1e-4,
) -> RadialGrid:
    """
    Build the piecewise mesh up to ``r_max``.

    Args:
        h: Base step (a.u.)
        boundaries: Region boundaries; the step doubles after each one
        r_max: Outer radius; the grid stops at the last point not beyond it
        r_min: Inner cutoff stored on the grid

    Raises:
        DomainError: If h is not positive or r_max lies beyond the last boundary
    """
    if not h > 0:
        raise DomainError(
            error_code="NUM-001",
            module="ode.grid",
            message=f"Base step must be positive, got {h}",
            argument="h",
            value=h,
        )
    tolerance = 1e-9 * max(1.0, r_max)
    if r_max > boundaries[-1] + tolerance:
        raise DomainError(
            error_code="NUM-001",
            module="ode.grid",
            message=f"r_max {r_max} lies beyond the last boundary {boundaries[-1]}",
            argument="r_max",
            value=r_max,
        )

    pieces: list[NDArray[np.float64]] = []
    regions: list[Region] = []
    snapped: list[float] = []
    origin = 0.0
    count = 0
    for level, boundary in enumerate(boundaries):
        step = h * 2**level
        n = max(1, int(round((boundary - origin) / step)))
        points = origin + step * np.arange(1, n + 1)
        points = points[points <= r_max + tolerance]
        if points.size == 0:
            break
        start = max(count - 1, 0)
        pieces.append(points)
        count += points.size
        regions.append(Region(start, count - 1, step))
        origin = origin + n * step
        snapped.append(origin)
        if points.size < n:
            break

    r = np.round(np.concatenate(pieces), 12)
    return RadialGrid(h=h, r=r, regions=tuple(regions), r_min=r_min, boundaries=tuple(snapped))


def grid_from_numerics(numerics: NumericsConfig, extended: bool = False, r_max: float | None = None) -> RadialGrid:
    """Grid described by a NumericsConfig, optionally out to ``extend_to`` or an explicit ``r_max``."""
    if r_max is None:
        r_max = numerics.extend_to if extended else numerics.r_max
    return build_grid(numerics.h, numerics.boundaries, r_max=r_max, r_min=numerics.r_min)
