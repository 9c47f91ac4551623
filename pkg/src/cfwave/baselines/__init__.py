"""
Comparison solvers: coupled Numerov (McDMM style), local equivalent exchange,
and the steplength-sensitivity report.

Quick Start:
    ```python
    from cfwave.baselines import solve_local_exchange, solve_mcdmm, steplength_sensitivity
    from cfwave.potentials import ChannelSpec, ExchangeModel

    channel = ChannelSpec(k=0.1, l=0, S=0)
    solve_mcdmm(channel).result.unstable
    solve_local_exchange(channel, ExchangeModel.FMCCLE).result.delta
    steplength_sensitivity(channel, "mcdmm", [0.004, 0.006, 0.008]).spread
    ```
"""

from .local_exchange import SOLVER_IDS, local_potential, solve_local_exchange
from .mcdmm import combine_columns, growth_coefficients, propagate_columns, solve_mcdmm, two_point_phases
from .sensitivity import MAX_DIGITS, SensitivityReport, stable_digits, steplength_sensitivity
from .series import FIT_DEGREE, FIT_RADIUS, fit_expansion, regular_start, series_coefficients

__all__ = [
    # Series start
    "regular_start",
    "series_coefficients",
    "fit_expansion",
    "FIT_RADIUS",
    "FIT_DEGREE",
    # Local exchange
    "solve_local_exchange",
    "local_potential",
    "SOLVER_IDS",
    # Coupled Numerov
    "solve_mcdmm",
    "propagate_columns",
    "combine_columns",
    "growth_coefficients",
    "two_point_phases",
    # Sensitivity
    "SensitivityReport",
    "steplength_sensitivity",
    "stable_digits",
    "MAX_DIGITS",
]
