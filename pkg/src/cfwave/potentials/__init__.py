"""
Target, interaction potentials and coupled-system coefficients.

Quick Start:
    ```python
    from cfwave.potentials import ChannelSpec, coupled_coefficients, static_potential

    channel = ChannelSpec(k=0.5, l=0, S=1)
    coeffs = coupled_coefficients(channel)
    static_potential(1.0)  # -0.541341
    ```
"""

from .coefficients import CoupledCoefficients, coupled_coefficients
from .exchange import local_exchange
from .hydrogen import POLARIZABILITY, R_SWITCH, orbital, polarization_potential, static_potential
from .models import ChannelSpec, ExchangeModel, TargetState

__all__ = [
    # Models
    "ChannelSpec",
    "TargetState",
    "ExchangeModel",
    # Potentials
    "static_potential",
    "polarization_potential",
    "local_exchange",
    "orbital",
    "POLARIZABILITY",
    "R_SWITCH",
    # Coupled system
    "CoupledCoefficients",
    "coupled_coefficients",
]
