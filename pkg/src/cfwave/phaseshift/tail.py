"""
Phase accumulated by the polarization tail beyond the matching radius.

First-order variable-phase estimate at frozen delta,

    Delta(R) = -(1/k) int_R^Rfar U_pol(r) u(r)^2 dr + 0.75 / (k Rfar^3),
    u = s_l(kr) cos(delta) + c_l(kr) sin(delta),

where the last term is the -4.5/r^4 tail with u^2 averaged to 1/2.
"""

import math

import numpy as np
from numpy.typing import NDArray
from scipy.integrate import cumulative_simpson, simpson

from cfwave.potentials import ChannelSpec, polarization_potential
from cfwave.special import riccati

REMAINDER_ACCURACY = 1e-11
"""Size of the analytic remainder at the far radius (rad)"""


def far_radius(k: float, R: float) -> float:
    """Radius beyond which the averaged tail contributes less than REMAINDER_ACCURACY."""
    return max(2.0 * R, (0.75 / (k * REMAINDER_ACCURACY)) ** (1.0 / 3.0))


def _phase_integrand(r: NDArray[np.float64], channel: ChannelSpec, delta: float) -> NDArray[np.float64]:
    pair = riccati(channel.l, channel.k * r)
    u = pair.s * math.cos(delta) + pair.c * math.sin(delta)
    return polarization_potential(r) * u * u


def tail_phase(channel: ChannelSpec, delta: float, R: float) -> float:
    """
    Tail correction at a single matching radius.

    Args:
        channel: Scattering channel
        delta: Phase at which u is frozen
        R: Matching radius (a.u.)

    Returns:
        Phase (rad) to add to the local phase at R
    """
    k = channel.k
    R_far = far_radius(k, R)
    step = min(math.pi / (24.0 * k), R / 40.0)
    n = max(int(math.ceil((R_far - R) / step)), 2)
    r = np.linspace(R, R_far, n + 1)
    integral = float(simpson(_phase_integrand(r, channel, delta), x=r))
    return -integral / k + 0.75 / (k * R_far**3)


def tail_phases(channel: ChannelSpec, delta: float, radii: NDArray[np.float64]) -> NDArray[np.float64]:
    """
    Tail corrections at every radius of an ascending window.

    The outermost radius gets the full integral; inner radii add the
    contribution between them and the outermost one.
    """
    radii = np.asarray(radii, dtype=float)
    outer = tail_phase(channel, delta, float(radii[-1]))
    if radii.size == 1:
        return np.array([outer])
    inner = cumulative_simpson(_phase_integrand(radii, channel, delta), x=radii, initial=0.0)
    between = inner[-1] - inner
    return outer - between / channel.k
