"""
Phase extraction from f1 and f1' through the Q function.

    B = f1' - ((l'+1)/r) f1
    Q(r) = -[B s_l + k f1 s_{l+1}] / [B c_l + k f1 c_{l+1}]  (at kr)

Q equals tan(delta) wherever f1 is a free wave s cos(delta) + c sin(delta),
and vanishes for f1 = s_l.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from cfwave.foundation.config import NumericsConfig
from cfwave.foundation.exceptions import NoPlateauError
from cfwave.foundation.logging import get_logger
from cfwave.potentials import ChannelSpec
from cfwave.special import riccati

from .tail import tail_phases

logger = get_logger(__name__)


def _components(
    f1: ArrayLike, f1_prime: ArrayLike, r: ArrayLike, channel: ChannelSpec
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    f = np.asarray(f1, dtype=float)
    fp = np.asarray(f1_prime, dtype=float)
    x = np.asarray(r, dtype=float)
    k, l = channel.k, channel.l
    pair = riccati(l, k * x)
    B = fp - (l + 1) / x * f
    numerator = B * pair.s + k * f * pair.s_next
    denominator = B * pair.c + k * f * pair.c_next
    return np.asarray(numerator), np.asarray(denominator)


def wrap_phase(delta: ArrayLike) -> NDArray[np.float64]:
    """Reduce angles to (-pi/2, pi/2]."""
    d = np.asarray(delta, dtype=float)
    return np.pi / 2 - np.mod(np.pi / 2 - d, np.pi)


def q_function(f1: ArrayLike, f1_prime: ArrayLike, r: ArrayLike, channel: ChannelSpec) -> NDArray[np.float64] | float:
    """
    Q(r) from f1, f1' at radius r.

    Returns:
        Q value(s); +-inf where the denominator vanishes (delta = pi/2)

    Example:
        ```python
        pair = riccati(0, 0.5 * 20.0)
        q_function(pair.s, 0.5 * pair.s_prime, 20.0, ChannelSpec(k=0.5))  # 0.0
        ```
    """
    numerator, denominator = _components(f1, f1_prime, r, channel)
    with np.errstate(divide="ignore", invalid="ignore"):
        q = -numerator / denominator
    return float(q) if q.ndim == 0 else q


def local_phase(f1: ArrayLike, f1_prime: ArrayLike, r: ArrayLike, channel: ChannelSpec) -> NDArray[np.float64]:
    """arctan Q in (-pi/2, pi/2], robust where Q is infinite."""
    numerator, denominator = _components(f1, f1_prime, r, channel)
    return wrap_phase(np.arctan2(-numerator, denominator))


def circular_mean(delta: NDArray[np.float64]) -> float:
    """Mean of angles defined modulo pi, reduced to (-pi/2, pi/2]."""
    mean = 0.5 * math.atan2(float(np.mean(np.sin(2 * delta))), float(np.mean(np.cos(2 * delta))))
    return float(wrap_phase(mean))


def phase_spread(delta: NDArray[np.float64]) -> float:
    """Absolute spread (rad) of angles defined modulo pi."""
    if delta.size == 0:
        return 0.0
    offsets = wrap_phase(delta - circular_mean(delta))
    return float(np.max(offsets) - np.min(offsets))


@dataclass(frozen=True, eq=False)
class PhaseWindow:
    """
    Phase diagnostics over the matching window.

    Attributes:
        r: Window radii (ascending; the plateau is the trailing part)
        local: Local phase arctan Q per radius
        corrected: Local phase plus the polarization tail correction
        q: Q over the plateau window
        principal: Circular mean of ``corrected`` over the plateau window
        spread: Absolute spread of ``corrected`` over the plateau window
        plateau: Number of trailing samples forming the plateau window
    """

    r: NDArray[np.float64]
    local: NDArray[np.float64]
    corrected: NDArray[np.float64]
    q: NDArray[np.float64]
    principal: float
    spread: float
    plateau: int

    @property
    def tan_delta(self) -> float:
        return math.tan(self.principal)


def extract_phase(
    r: ArrayLike,
    f1: ArrayLike,
    f1_prime: ArrayLike,
    channel: ChannelSpec,
    numerics: NumericsConfig | None = None,
    require_plateau: bool = True,
) -> PhaseWindow:
    """
    Principal phase shift from the plateau of Q over the trailing mesh points.

    Args:
        r: Ascending mesh radii reaching the asymptotic region
        f1, f1_prime: Radial function and derivative on ``r``
        channel: Scattering channel
        numerics: Window sizes, tolerance and the tail-correction switch
        require_plateau: Raise when the spread exceeds the tolerance

    Raises:
        NoPlateauError: If the plateau spread exceeds ``numerics.plateau_tol``
    """
    numerics = numerics or NumericsConfig()
    r = np.asarray(r, dtype=float)
    window = slice(-numerics.matching_window, None)
    radii = r[window]
    f = np.asarray(f1, dtype=float)[window]
    fp = np.asarray(f1_prime, dtype=float)[window]

    local = local_phase(f, fp, radii, channel)
    corrected = local.copy()
    if numerics.tail_correction and numerics.polarization:
        corrected = wrap_phase(local + tail_phases(channel, float(local[-1]), radii))

    plateau = min(numerics.plateau_window, radii.size)
    principal = circular_mean(corrected[-plateau:])
    spread = phase_spread(corrected[-plateau:])
    q = np.asarray(q_function(f[-plateau:], fp[-plateau:], radii[-plateau:], channel))

    logger.debug(
        "phase window",
        extra={"channel": channel.label, "principal": principal, "spread": spread, "r_max": float(radii[-1])},
    )
    if require_plateau and not spread < numerics.plateau_tol:
        raise NoPlateauError(
            error_code="NUM-007",
            module="phaseshift.extraction",
            message=f"Q(r) did not settle for {channel.label}: spread {spread:.2e} rad",
            channel=channel.label,
            quantity="Q",
            spread=spread,
            tolerance=numerics.plateau_tol,
            r_max=float(radii[-1]),
        )
    return PhaseWindow(
        r=radii,
        local=local,
        corrected=corrected,
        q=q,
        principal=principal,
        spread=spread,
        plateau=plateau,
    )
