"""
cfwave - continuum wavefunctions and phase shifts for electron-hydrogen
scattering with exact non-local exchange, by the canonical function method.

Solvers:
    kftee  Canonical functions, exact exchange
    mcdmm  Series-start coupled Numerov baseline
    fmcc   Numerov with the Furness-McCarthy local exchange potential
    bn     Numerov with the Bransden-Noble local exchange potential

Quick Start:
    ```python
    from cfwave import ChannelSpec, run_solver

    run_solver(ChannelSpec(k=0.5, l=0, S=0), "kftee").delta  # ~1.168
    ```
"""

from cfwave.foundation.config import NumericsConfig, SolverId
from cfwave.phaseshift import ContinuumWave, PhaseShiftResult, SolverOutput
from cfwave.potentials import ChannelSpec, ExchangeModel
from cfwave.solvers import run_solver, solve_channel

__version__ = "0.1.0"

__all__ = [
    "ChannelSpec",
    "ExchangeModel",
    "NumericsConfig",
    "SolverId",
    "PhaseShiftResult",
    "ContinuumWave",
    "SolverOutput",
    "run_solver",
    "solve_channel",
    "__version__",
]
