"""
Power-series start of the regular solution at the origin.

For u'' - l(l+1)/r^2 u = w(r) u with r w(r) = sum_j p_j r^{j-1} smooth at
r = 0, the regular solution u = r^{l+1} sum_n a_n r^n obeys

    a_n n (n + 2l + 1) = sum_{j=1}^{n} p_j a_{n-j},   a_0 = 1.
"""

from collections.abc import Callable

import numpy as np
from numpy.polynomial import polynomial as P
from numpy.typing import ArrayLike, NDArray

from cfwave.foundation.exceptions import DomainError

FIT_RADIUS = 0.05
"""Outer radius of the samples the potential expansion is fitted on"""

FIT_DEGREE = 5
"""Degree of the polynomial fitted to r w(r)"""


def series_coefficients(l: int, p: ArrayLike, order: int = FIT_DEGREE + 1) -> NDArray[np.float64]:
    """
    Coefficients a_0..a_order of the regular solution.

    Args:
        l: Partial wave
        p: Expansion of r w(r); p[j - 1] multiplies r^{j-1}
        order: Highest power kept beyond the leading r^{l+1}
    """
    p = np.asarray(p, dtype=float)
    a = np.zeros(order + 1)
    a[0] = 1.0
    for n in range(1, order + 1):
        j = np.arange(1, min(n, p.size) + 1)
        a[n] = float(np.dot(p[j - 1], a[n - j])) / (n * (n + 2 * l + 1))
    return a


def fit_expansion(potential: Callable[[NDArray[np.float64]], NDArray[np.float64]], radius: float = FIT_RADIUS) -> NDArray[np.float64]:
    """
    Least-squares expansion of r w(r) on (0, radius].

    Args:
        potential: w(r), the coefficient multiplying u apart from the centrifugal term
        radius: Fit interval
    """
    r = np.linspace(radius / 64, radius, 64)
    return P.polyfit(r, r * potential(r), FIT_DEGREE)


def regular_start(
    l: int,
    potential: Callable[[NDArray[np.float64]], NDArray[np.float64]],
    radii: ArrayLike,
) -> NDArray[np.float64]:
    """
    Regular solution u ~ r^{l+1} evaluated at small radii.

    Args:
        l: Partial wave
        potential: w(r) in u'' - l(l+1)/r^2 u = w u
        radii: Launch radii, inside ``FIT_RADIUS``

    Raises:
        DomainError: If a launch radius lies outside (0, FIT_RADIUS]

    Example:
        ```python
        # free particle, l = 0: u = sin(kr)/k to the order kept
        regular_start(0, lambda r: -np.full_like(r, 0.25), [0.006, 0.012])
        ```
    """
    x = np.asarray(radii, dtype=float)
    if np.any(x <= 0) or np.any(x > FIT_RADIUS):
        raise DomainError(
            error_code="NUM-001",
            module="baselines.series",
            message=f"Series launch radii must lie in (0, {FIT_RADIUS}]",
            argument="radii",
            value=float(np.max(x)),
        )
    a = series_coefficients(l, fit_expansion(potential))
    return x ** (l + 1) * P.polyval(x, a)
