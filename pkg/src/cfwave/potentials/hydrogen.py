"""
Hydrogen 1s orbital, static potential and polarization potential (Z = 1).

Both potentials are the physical (attractive, negative) interaction energies
in Rydberg; the coefficient assembler subtracts them from k^2.
"""

from math import factorial

import numpy as np
from numpy.typing import ArrayLike, NDArray

from cfwave.foundation.exceptions import DomainError

POLARIZABILITY = 4.5
"""Static dipole polarizability of H(1s) in a.u.; the tail is -2 * 4.5 / (2 r^4) Ry"""

R_SWITCH = 0.2
"""Below this radius the polarization bracket is evaluated by its Taylor series"""

_SERIES_ORDER = 24
# e^{2r} - P5(r) = (16/135) r^5 + sum_{n>=6} 2^n r^n / n!, divided by r^4
_SERIES_COEFFS = np.array(
    [16.0 / 135.0] + [2.0**n / factorial(n) for n in range(6, _SERIES_ORDER + 1)]
)
_SERIES_POWERS = np.array([1] + [n - 4 for n in range(6, _SERIES_ORDER + 1)])


def check_radius(r: ArrayLike, function: str) -> NDArray[np.float64]:
    """Return ``r`` as an array, raising DomainError unless every radius is finite and positive."""
    x = np.asarray(r, dtype=float)
    if x.size and not (np.all(np.isfinite(x)) and np.all(x > 0)):
        raise DomainError(
            error_code="NUM-001",
            module="potentials.hydrogen",
            message=f"{function} needs finite r > 0",
            argument="r",
            value=float(np.nanmin(x)),
        )
    return x


def orbital(r: ArrayLike) -> NDArray[np.float64]:
    """R_10(r) = 2 r exp(-r)."""
    x = np.asarray(r, dtype=float)
    return 2.0 * x * np.exp(-x)


def static_potential(r: ArrayLike) -> NDArray[np.float64] | float:
    """
    Static potential of the 1s charge cloud plus nucleus, -2(1 + 1/r) e^{-2r}.

    Args:
        r: Radius (a.u.), scalar or array

    Returns:
        Potential in Ry (negative)

    Raises:
        DomainError: If any r <= 0

    Example:
        ```python
        static_potential(1.0)  # -0.5413411329464508
        ```
    """
    x = check_radius(r, "static_potential")
    value = -2.0 * (1.0 + 1.0 / x) * np.exp(-2.0 * x)
    return float(value) if value.ndim == 0 else value


def polarization_potential(r: ArrayLike) -> NDArray[np.float64] | float:
    """
    Adiabatic dipole polarization potential with the 1s cutoff,

        -(9 / (2 r^4)) [1 - e^{-2r}(1 + 2r + 2r^2 + 4r^3/3 + 2r^4/3 + 4r^5/27)].

    Finite at the origin (it vanishes linearly). Below ``R_SWITCH`` the bracket
    is replaced by its series to avoid cancellation.

    Raises:
        DomainError: If any r <= 0
    """
    x = np.atleast_1d(check_radius(r, "polarization_potential"))
    out = np.empty_like(x)
    small = x < R_SWITCH

    xs = x[small]
    series = (_SERIES_COEFFS * xs[..., None] ** _SERIES_POWERS).sum(axis=-1)
    out[small] = -POLARIZABILITY * np.exp(-2.0 * xs) * series

    xl = x[~small]
    poly = 1 + 2 * xl + 2 * xl**2 + (4 / 3) * xl**3 + (2 / 3) * xl**4 + (4 / 27) * xl**5
    out[~small] = -POLARIZABILITY / xl**4 * (1.0 - np.exp(-2.0 * xl) * poly)
    return float(out[0]) if np.ndim(r) == 0 else out
