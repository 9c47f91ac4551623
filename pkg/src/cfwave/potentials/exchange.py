"""
Local equivalent-exchange potentials.

Both models use the semiclassical square-root form

    M(r) = 1/2 [sqrt(T^2 + 16 e^{-2r}) - T]

with T = k^2 - U_st(r) (Furness-McCarthy) or T = k^2 (Bransden-Noble); the
factor 16 e^{-2r} is 4 pi times four times the 1s density. The returned
potential is (-1)^S M: repulsive for the singlet, attractive for the triplet.
"""

import numpy as np
from numpy.typing import ArrayLike, NDArray

from .hydrogen import check_radius, static_potential
from .models import ChannelSpec, ExchangeModel


def local_exchange(
    r: ArrayLike,
    channel: ChannelSpec,
    model: ExchangeModel | str = ExchangeModel.FMCCLE,
) -> NDArray[np.float64] | float:
    """
    Spin-dependent local exchange potential in Ry.

    Args:
        r: Radius (a.u.)
        channel: Scattering channel (k and S are used)
        model: FMcCLE or BNLE

    Returns:
        V_ex(r), to be added to U_st + U_pol

    Raises:
        DomainError: If any r <= 0

    Example:
        ```python
        channel = ChannelSpec(k=0.5, l=0, S=0)
        local_exchange(1.0, channel, ExchangeModel.FMCCLE)  # 0.43973...
        ```
    """
    model = ExchangeModel(model)
    x = check_radius(r, "local_exchange")
    density = 16.0 * np.exp(-2.0 * x)

    T = channel.energy
    if model is ExchangeModel.FMCCLE:
        T = T - static_potential(x)

    # 1/2 (sqrt(T^2 + d) - T) written without the cancellation at large T
    magnitude = 0.5 * density / (np.sqrt(T * T + density) + T)
    value = channel.spin_sign * magnitude
    return float(value) if np.ndim(value) == 0 else value
