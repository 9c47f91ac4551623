"""
Channel and target data models.

Units are Rydberg for energies and Bohr radii for lengths; a free electron of
wavenumber k carries energy k^2 Ry.
"""

from enum import Enum
from typing import Annotated

import numpy as np
from numpy.typing import ArrayLike, NDArray
from pydantic import BaseModel, ConfigDict, Field


class ExchangeModel(str, Enum):
    """
    Local equivalent-exchange models.

    Attributes:
        FMCCLE: Furness-McCarthy, T = k^2 - U_st
        BNLE: Bransden-Noble, T = k^2

    Example:
        ```python
        model = ExchangeModel("fmcc")
        model.label  # "FMcCLE"
        ```
    """

    FMCCLE = "fmcc"
    BNLE = "bn"

    @property
    def label(self) -> str:
        """Conventional abbreviation."""
        return {ExchangeModel.FMCCLE: "FMcCLE", ExchangeModel.BNLE: "BNLE"}[self]


class TargetState(BaseModel):
    """
    Hydrogenic 1s target.

    Attributes:
        Z: Nuclear charge (only Z = 1 is validated)
    """

    Z: Annotated[int, Field(ge=1)] = 1

    model_config = ConfigDict(frozen=True)

    @property
    def energy(self) -> float:
        """E_10 = -Z^2 Ry."""
        return -float(self.Z**2)

    def orbital(self, r: ArrayLike) -> NDArray[np.float64]:
        """R_10(r) = 2 Z^{3/2} r exp(-Z r), normalized to 1 on [0, inf)."""
        r = np.asarray(r, dtype=float)
        return 2.0 * self.Z**1.5 * r * np.exp(-self.Z * r)


class ChannelSpec(BaseModel):
    """
    One scattering channel (k, l', S) on a hydrogen target.

    Attributes:
        k: Wavenumber in a.u. (energy k^2 Ry)
        l: Partial wave of the free electron
        S: Total spin, 0 (singlet) or 1 (triplet)
        Z: Nuclear charge; Coulomb asymptotics for Z > 1 are not supported

    Example:
        ```python
        channel = ChannelSpec(k=0.5, l=0, S=1)
        channel.kappa      # 1.25 (k^2 - E_10)
        channel.spin_sign  # -1
        ```
    """

    k: Annotated[float, Field(gt=0, allow_inf_nan=False)]
    l: Annotated[int, Field(ge=0)] = 0
    S: Annotated[int, Field(ge=0, le=1)] = 0
    Z: Annotated[int, Field(ge=1, le=1)] = 1

    model_config = ConfigDict(frozen=True)

    @property
    def target(self) -> TargetState:
        """Target state for this channel."""
        return TargetState(Z=self.Z)

    @property
    def energy(self) -> float:
        """k^2 in Ry."""
        return self.k * self.k

    @property
    def kappa(self) -> float:
        """k^2 - E_10, the prefactor of the exchange constant."""
        return self.energy - self.target.energy

    @property
    def spin_sign(self) -> int:
        """(-1)^S."""
        return -1 if self.S else 1

    @property
    def centrifugal(self) -> int:
        """l'(l'+1)."""
        return self.l * (self.l + 1)

    @property
    def label(self) -> str:
        """Short identifier used in logs and error context."""
        return f"k={self.k:g},l={self.l},S={self.S}"

    def __str__(self) -> str:
        return self.label
