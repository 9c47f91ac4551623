"""
Coefficients of the coupled (F, G) system

    F'' + V11 F + V12 G = W1 A
    G'' + V21 F + V22 G = W2 A

where G carries the exchange overlap y_l'(r) and A is the exchange constant.

V11 = k^2 - U_st - U_pol - l'(l'+1)/r^2,  V22 = -l'(l'+1)/r^2,
V12 = (-1)^{S+1} (2/r) R_10 / (2l'+1),    V21 = (2l'+1) R_10 / r,
W1  = (-1)^{S+1} R_10,                    W2  = 0.

With this sign of V12 the triplet operator annihilates the 1s orbital, as the
Pauli principle requires; V12 V21 = (-1)^{S+1} 2 R_10^2 / r^2.
"""

from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from cfwave.foundation.config import NumericsConfig

from .hydrogen import check_radius, orbital, polarization_potential, static_potential
from .models import ChannelSpec


@dataclass(frozen=True)
class CoupledCoefficients:
    """
    Coefficient functions of the coupled system for one channel.

    The physics switches remove the static potential, the polarization
    potential, or every exchange term (V12, V21, W1), leaving F decoupled.

    Example:
        ```python
        coeffs = coupled_coefficients(ChannelSpec(k=0.5, l=0, S=0))
        V, W = coeffs.evaluate(np.array([0.5, 1.0]))
        V.shape, W.shape  # (2, 2, 2), (2, 2)
        ```
    """

    channel: ChannelSpec
    exchange: bool = True
    static: bool = True
    polarization: bool = True

    @property
    def exchange_sign(self) -> int:
        """(-1)^{S+1}."""
        return -self.channel.spin_sign

    def interaction(self, r: ArrayLike) -> NDArray[np.float64]:
        """U_st + U_pol (physical sign, Ry) with the switches applied."""
        x = check_radius(r, "interaction")
        total = np.zeros_like(x)
        if self.static:
            total = total + static_potential(x)
        if self.polarization:
            total = total + polarization_potential(x)
        return total

    def effective(self, r: ArrayLike) -> NDArray[np.float64]:
        """k^2 - U_st - U_pol."""
        return self.channel.energy - self.interaction(r)

    def v11(self, r: ArrayLike) -> NDArray[np.float64]:
        x = check_radius(r, "v11")
        return self.effective(x) - self.channel.centrifugal / (x * x)

    def v12(self, r: ArrayLike) -> NDArray[np.float64]:
        x = check_radius(r, "v12")
        if not self.exchange:
            return np.zeros_like(x)
        return self.exchange_sign * (2.0 / x) * orbital(x) / (2 * self.channel.l + 1)

    def v21(self, r: ArrayLike) -> NDArray[np.float64]:
        x = check_radius(r, "v21")
        if not self.exchange:
            return np.zeros_like(x)
        return (2 * self.channel.l + 1) * orbital(x) / x

    def v22(self, r: ArrayLike) -> NDArray[np.float64]:
        x = check_radius(r, "v22")
        return -self.channel.centrifugal / (x * x)

    def w1(self, r: ArrayLike) -> NDArray[np.float64]:
        x = check_radius(r, "w1")
        if not self.exchange:
            return np.zeros_like(x)
        return self.exchange_sign * orbital(x)

    def w2(self, r: ArrayLike) -> NDArray[np.float64]:
        return np.zeros_like(check_radius(r, "w2"))

    def evaluate(self, r: ArrayLike) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
        """
        Coefficient matrix and source vector at ``r``.

        Returns:
            (V, W) with shapes ``r.shape + (2, 2)`` and ``r.shape + (2,)``
        """
        x = check_radius(r, "evaluate")
        V = np.empty(x.shape + (2, 2))
        V[..., 0, 0] = self.v11(x)
        V[..., 0, 1] = self.v12(x)
        V[..., 1, 0] = self.v21(x)
        V[..., 1, 1] = self.v22(x)
        W = np.stack([self.w1(x), self.w2(x)], axis=-1)
        return V, W


def coupled_coefficients(
    channel: ChannelSpec,
    numerics: NumericsConfig | None = None,
) -> CoupledCoefficients:
    """
    Assemble the coupled-system coefficients for a channel.

    Args:
        channel: Scattering channel
        numerics: Source of the physics switches (all on when None)
    """
    if numerics is None:
        return CoupledCoefficients(channel)
    return CoupledCoefficients(
        channel,
        exchange=numerics.exchange,
        static=numerics.static,
        polarization=numerics.polarization,
    )
