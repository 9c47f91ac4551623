"""
Radial mesh and integrators for the coupled second-order system.

Quick Start:
    ```python
    from cfwave.ode import build_grid, integrate_pair, Direction

    grid = build_grid(0.006)
    sol = integrate_pair(coeffs, [0, 1, 0, 0], grid, r0=grid.snap(1.0), direction=Direction.INWARD)
    ```
"""

from .grid import RadialGrid, Region, build_grid, grid_from_numerics
from .integrators import (
    CoefficientSource,
    Direction,
    SampledSolution,
    integrate_pair,
    output_radii,
)
from .numerov import finite_difference_derivative, numerov_coupled, numerov_integrate

__all__ = [
    # Grid
    "RadialGrid",
    "Region",
    "build_grid",
    "grid_from_numerics",
    # Adaptive integration
    "Direction",
    "CoefficientSource",
    "SampledSolution",
    "integrate_pair",
    "output_radii",
    # Numerov
    "numerov_integrate",
    "numerov_coupled",
    "finite_difference_derivative",
]
