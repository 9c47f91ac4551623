"""
Riccati-Bessel functions s_l(rho) = rho j_l(rho) and c_l(rho) = -rho y_l(rho).

Convention: s_l -> sin(rho - l pi/2) and c_l -> cos(rho - l pi/2) for large
rho, so the Wronskian s_l c_l' - s_l' c_l equals -1 for every l.

c_l is generated by upward recursion (stable for the dominant solution).
s_l uses upward recursion when rho >= l and Miller's downward recursion
otherwise; upward recursion of the minimal solution loses all digits there.
"""

from dataclasses import dataclass
from math import isqrt

import numpy as np
from numpy.typing import ArrayLike, NDArray

from cfwave.foundation.exceptions import DomainError, OverflowGuardError

_RESCALE_AT = 1e200
_RESCALE_BY = 1e-200


@dataclass(frozen=True)
class RiccatiPair:
    """
    s_l, c_l and their rho-derivatives at one partial wave.

    ``s_next``/``c_next`` hold s_{l+1}, c_{l+1}, which the Q-function needs.
    Fields are floats for scalar ``rho`` and arrays otherwise.
    """

    l: int
    rho: float | NDArray[np.float64]
    s: float | NDArray[np.float64]
    c: float | NDArray[np.float64]
    s_prime: float | NDArray[np.float64]
    c_prime: float | NDArray[np.float64]
    s_next: float | NDArray[np.float64]
    c_next: float | NDArray[np.float64]

    @property
    def wronskian(self) -> float | NDArray[np.float64]:
        """s c' - s' c (equals -1)."""
        return self.s * self.c_prime - self.s_prime * self.c


def riccati(l: int, rho: ArrayLike) -> RiccatiPair:
    """
    Evaluate s_l, c_l and their derivatives.

    Args:
        l: Partial wave (>= 0)
        rho: Positive argument, scalar or array

    Returns:
        RiccatiPair at ``l`` (with s_{l+1}, c_{l+1})

    Raises:
        DomainError: If ``l`` is negative or any rho is not finite and positive
        OverflowGuardError: If c_l is not representable (tiny rho, large l)

    Example:
        ```python
        pair = riccati(1, 1.0)
        pair.s  # 0.30116867893975674
        ```
    """
    scalar = np.ndim(rho) == 0
    x = np.atleast_1d(np.asarray(rho, dtype=float))
    s_seq, c_seq = riccati_sequence(l + 1, x)

    s, c = s_seq[l], c_seq[l]
    s_next, c_next = s_seq[l + 1], c_seq[l + 1]
    s_prime = (l + 1) / x * s - s_next
    c_prime = (l + 1) / x * c - c_next

    values = (x, s, c, s_prime, c_prime, s_next, c_next)
    if scalar:
        values = tuple(float(v[0]) for v in values)
    return RiccatiPair(l, *values)


def riccati_sequence(lmax: int, rho: ArrayLike) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    s_n and c_n for n = 0..lmax.

    Args:
        lmax: Highest order (>= 0)
        rho: Positive argument(s)

    Returns:
        (s, c), each of shape ``(lmax + 1,) + rho.shape``

    Raises:
        DomainError: For negative ``lmax`` or non-positive rho
        OverflowGuardError: If c_n overflows
    """
    if lmax < 0:
        raise DomainError(
            error_code="NUM-001",
            module="special.riccati",
            message=f"Partial wave must be non-negative, got {lmax}",
            argument="l",
            value=float(lmax),
        )
    x = np.asarray(rho, dtype=float)
    if x.size and not (np.all(np.isfinite(x)) and np.all(x > 0)):
        raise DomainError(
            error_code="NUM-001",
            module="special.riccati",
            message="Riccati functions need finite rho > 0",
            argument="rho",
            value=float(np.nanmin(x)),
        )
    if x.ndim == 0:
        s, c = riccati_sequence(lmax, x.reshape(1))
        return s[:, 0], c[:, 0]

    c = _irregular_upward(lmax, x)
    s = np.empty_like(c)
    upward = x >= lmax
    if np.any(upward):
        s[:, upward] = _regular_upward(lmax, x[upward])
    if np.any(~upward):
        s[:, ~upward] = _regular_miller(lmax, x[~upward])
    return s, c


def _irregular_upward(lmax: int, x: NDArray[np.float64]) -> NDArray[np.float64]:
    out = np.empty((lmax + 1,) + x.shape)
    out[0] = np.cos(x)
    if lmax >= 1:
        out[1] = np.cos(x) / x + np.sin(x)
    with np.errstate(over="ignore", invalid="ignore"):
        for n in range(1, lmax):
            out[n + 1] = (2 * n + 1) / x * out[n] - out[n - 1]

    if not np.all(np.isfinite(out)):
        bad = ~np.all(np.isfinite(out), axis=0)
        raise OverflowGuardError(
            error_code="NUM-002",
            module="special.riccati",
            message=f"c_l overflows for l <= {lmax} at rho = {float(np.min(x[bad])):.3e}",
            l=lmax,
            rho=float(np.min(x[bad])),
        )
    return out


def _regular_upward(lmax: int, x: NDArray[np.float64]) -> NDArray[np.float64]:
    out = np.empty((lmax + 1,) + x.shape)
    out[0] = np.sin(x)
    if lmax >= 1:
        out[1] = np.sin(x) / x - np.cos(x)
    for n in range(1, lmax):
        out[n + 1] = (2 * n + 1) / x * out[n] - out[n - 1]
    return out


def _regular_miller(lmax: int, x: NDArray[np.float64]) -> NDArray[np.float64]:
    """Downward recursion from a start order well above lmax, renormalized to s_0 or s_1."""
    start = lmax + 20 + isqrt(40 * max(lmax, 1))
    out = np.zeros((lmax + 1,) + x.shape)

    upper = np.zeros_like(x)
    current = np.ones_like(x)
    for n in range(start, 0, -1):
        lower = (2 * n + 1) / x * current - upper
        big = np.abs(lower) > _RESCALE_AT
        if np.any(big):
            lower[big] *= _RESCALE_BY
            current[big] *= _RESCALE_BY
            out[:, big] *= _RESCALE_BY
        if n <= lmax:
            out[n] = current
        upper, current = current, lower
    out[0] = current

    # Near zeros of sin(rho) the first order is the better anchor.
    use_first = (x > 1.0) & (np.abs(np.sin(x)) < 0.2) & (lmax >= 1)
    exact0 = np.sin(x)
    exact1 = np.sin(x) / x - np.cos(x)
    scale = np.where(use_first, exact1 / np.where(use_first, out[min(1, lmax)], 1.0), exact0 / out[0])
    return out * scale
