"""
Numerov propagation on the piecewise mesh.

For y'' = -V y + S the three-point recurrence is

    (I - T+) y+ = (2I + 10 T) y - (I - T-) y- + d^2/12 (S+ + 10 S + S-),
    T = -(d^2 / 12) V,

with d the step from r_i to r_{i+1}. Where the step doubles, the back point
r_i - d is the grid point two fine steps behind, so the recurrence stays
uniform across boundaries.
"""

from collections.abc import Callable

import numpy as np
from numpy.typing import ArrayLike, NDArray

from cfwave.foundation.exceptions import DomainError

from .grid import RadialGrid
from .integrators import Direction, SampledSolution

_RENORM_AT = 1e150


def _back_indices(r: NDArray[np.float64], sign: int) -> tuple[NDArray[np.int64], NDArray[np.float64]]:
    """For each i, the index j with r_j = r_i - sign*d_i, d_i = |r_{i+sign} - r_i|."""
    n = r.size
    idx = np.arange(n)
    nxt = np.clip(idx + sign, 0, n - 1)
    d = np.abs(r[nxt] - r)
    target = r - sign * d
    back = np.searchsorted(r, target)
    back = np.clip(back, 0, n - 1)
    # searchsorted may land one above the nearest point
    lower = np.clip(back - 1, 0, n - 1)
    back = np.where(np.abs(r[lower] - target) < np.abs(r[back] - target), lower, back)
    return back, d


def numerov_coupled(
    r: NDArray[np.float64],
    V: NDArray[np.float64],
    y_start: ArrayLike,
    source: NDArray[np.float64] | None = None,
    direction: Direction | str = Direction.OUTWARD,
) -> NDArray[np.float64]:
    """
    Matrix Numerov propagation of c coupled channels with m columns.

    Args:
        r: Ascending radii; the step pattern must let r_i - d_i land on a point
        V: (n, c, c) coefficient matrices on ``r``
        y_start: (2, c, m) values at the first two points in the propagation
            direction (r[0], r[1] outward; r[-1], r[-2] inward)
        source: (n, c, m) inhomogeneous terms, or None
        direction: Propagation direction

    Returns:
        (n, c, m) solution values on ``r``

    Raises:
        DomainError: If a back point is missing from ``r``
    """
    direction = Direction(direction)
    r = np.asarray(r, dtype=float)
    n, c = V.shape[0], V.shape[1]
    start = np.asarray(y_start, dtype=float)
    m = start.shape[-1]
    sign = 1 if direction is Direction.OUTWARD else -1
    order = np.arange(n) if sign == 1 else np.arange(n - 1, -1, -1)

    back, d = _back_indices(r, sign)
    eye = np.eye(c)
    y = np.zeros((n, c, m))
    y[order[0]] = start[0]
    y[order[1]] = start[1]

    for pos in range(1, n - 1):
        i = order[pos]
        j = order[pos + 1]
        b = back[i]
        step = d[i]
        if abs(abs(r[i] - r[b]) - step) > 1e-9 * max(1.0, r[i]):
            raise DomainError(
                error_code="NUM-001",
                module="ode.numerov",
                message=f"No back point at r = {r[i] - sign * step:.6f} for the Numerov step",
                argument="r",
                value=float(r[i]),
            )
        w = step * step / 12.0
        T_next, T_here, T_back = -w * V[j], -w * V[i], -w * V[b]
        rhs = (2 * eye + 10 * T_here) @ y[i] - (eye - T_back) @ y[b]
        if source is not None:
            rhs = rhs + w * (source[j] + 10 * source[i] + source[b])
        y[j] = np.linalg.solve(eye - T_next, rhs)

        if source is None:
            peak = np.max(np.abs(y[j]))
            if peak > _RENORM_AT:
                y *= 1.0 / peak
    return y


def numerov_integrate(
    potential: Callable[[NDArray[np.float64]], NDArray[np.float64]] | ArrayLike,
    y_start: tuple[float, float],
    grid: RadialGrid,
    direction: Direction | str = Direction.OUTWARD,
) -> SampledSolution:
    """
    Single-channel Numerov for u'' + q(r) u = 0 on the grid.

    Args:
        potential: q(r) as a callable or sampled on ``grid.r``
        y_start: Values at the first two grid points in the propagation direction
        grid: Mesh (the recurrence follows its step doubling)
        direction: Outward from r = h or inward from the grid end

    Returns:
        SampledSolution with one channel and one column; derivatives by
        ``finite_difference_derivative``. The overall scale is arbitrary.
    """
    direction = Direction(direction)
    q = potential(grid.r) if callable(potential) else np.asarray(potential, dtype=float)
    V = q.reshape(-1, 1, 1)
    start = np.asarray(y_start, dtype=float).reshape(2, 1, 1)
    y = numerov_coupled(grid.r, V, start, direction=direction)[:, 0, 0]
    dy = finite_difference_derivative(y, grid.r)
    r0 = grid.r[0] if direction is Direction.OUTWARD else grid.r[-1]
    return SampledSolution(
        r=grid.r,
        values=y.reshape(-1, 1, 1),
        derivatives=dy.reshape(-1, 1, 1),
        direction=direction,
        r0=float(r0),
    )


_FORWARD = np.array([-25.0, 48.0, -36.0, 16.0, -3.0]) / 12.0
_SHIFTED = np.array([-3.0, -10.0, 18.0, -6.0, 1.0]) / 12.0
# (offset of the first stencil point, weights) for one-sided five-point stencils
_ONE_SIDED = ((0, _FORWARD), (-1, _SHIFTED), (-4, -_FORWARD[::-1]), (-3, -_SHIFTED[::-1]))


def finite_difference_derivative(y: ArrayLike, r: ArrayLike) -> NDArray[np.float64]:
    """
    First derivative of samples on a piecewise-uniform mesh.

    Five-point central differences wherever the stencil is uniform and
    fourth-order one-sided five-point stencils at the ends and next to
    region boundaries. Works along axis 0, so ``y`` may carry trailing
    channel axes.
    """
    y = np.asarray(y, dtype=float)
    r = np.asarray(r, dtype=float)
    dy = np.gradient(y, r, axis=0, edge_order=2)
    n = r.size
    if n < 5:
        return dy

    steps = np.diff(r)
    h = steps[1:-2]
    uniform = (
        np.isclose(steps[:-3], h, rtol=1e-8)
        & np.isclose(steps[2:-1], h, rtol=1e-8)
        & np.isclose(steps[3:], h, rtol=1e-8)
    )
    centre = np.arange(2, n - 2)[uniform]
    hh = h[uniform].reshape((-1,) + (1,) * (y.ndim - 1))
    dy[centre] = (y[centre - 2] - 8 * y[centre - 1] + 8 * y[centre + 1] - y[centre + 2]) / (12 * hh)

    rest = np.ones(n, dtype=bool)
    rest[centre] = False
    for i in np.flatnonzero(rest):
        for offset, weights in _ONE_SIDED:
            first = i + offset
            if first < 0 or first + 4 >= n:
                continue
            span = steps[first : first + 4]
            if np.allclose(span, span[0], rtol=1e-8):
                dy[i] = np.tensordot(weights, y[first : first + 5], axes=1) / span[0]
                break
    return dy
