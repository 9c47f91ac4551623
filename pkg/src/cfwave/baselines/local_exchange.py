"""
Single-channel baseline with a local equivalent-exchange potential.

    u'' + [k^2 - U_st - U_pol - V_ex - l(l+1)/r^2] u = 0

started by the power series at the first two mesh points and continued
outward by Numerov.
"""

from functools import partial

import numpy as np
from numpy.typing import NDArray

from cfwave.foundation.config import NumericsConfig, SolverId
from cfwave.foundation.logging import get_logger
from cfwave.ode import grid_from_numerics, numerov_integrate
from cfwave.phaseshift import ContinuumWave, SolverOutput, finish_channel, solve_with_extension
from cfwave.potentials import ChannelSpec, ExchangeModel, coupled_coefficients, local_exchange

from .series import regular_start

logger = get_logger(__name__)

SOLVER_IDS = {ExchangeModel.FMCCLE: SolverId.FMCC, ExchangeModel.BNLE: SolverId.BN}


def local_potential(
    r: NDArray[np.float64],
    channel: ChannelSpec,
    model: ExchangeModel,
    numerics: NumericsConfig,
) -> NDArray[np.float64]:
    """U_st + U_pol + V_ex - k^2 with the physics switches applied."""
    coeffs = coupled_coefficients(channel, numerics)
    w = -coeffs.effective(r)
    if numerics.exchange:
        w = w + local_exchange(r, channel, model)
    return w


def _solve_on_mesh(channel: ChannelSpec, numerics: NumericsConfig, model: ExchangeModel) -> SolverOutput:
    grid = grid_from_numerics(numerics)
    w = partial(local_potential, channel=channel, model=model, numerics=numerics)
    q = -(w(grid.r) + channel.centrifugal / grid.r**2)
    start = regular_start(channel.l, w, grid.r[:2])

    solution = numerov_integrate(q, (float(start[0]), float(start[1])), grid)
    values, slopes = solution.column(0)
    f, f_prime = values[:, 0], slopes[:, 0]
    logger.debug(
        "local exchange propagation done",
        extra={"channel": channel.label, "model": model.label, "points": len(grid), "r_max": grid.r_max},
    )
    wave = ContinuumWave.single_channel(grid.r, f, f_prime)
    return finish_channel(wave, channel, numerics, SOLVER_IDS[model])


def solve_local_exchange(
    channel: ChannelSpec,
    model: ExchangeModel | str = ExchangeModel.FMCCLE,
    numerics: NumericsConfig | None = None,
) -> SolverOutput:
    """
    Phase shift with a local equivalent-exchange potential.

    The plateau of Q(r) is judged against ``instability_tol``: the Numerov
    phase drifts by ~(kh)^4 per unit kr, far above the canonical tolerance.

    Args:
        channel: Scattering channel
        model: FMcCLE or BNLE
        numerics: Mesh and tolerances (defaults when None)

    Example:
        ```python
        out = solve_local_exchange(ChannelSpec(k=0.5, l=0, S=0), ExchangeModel.BNLE)
        out.result.solver  # SolverId.BN
        ```
    """
    model = ExchangeModel(model)
    numerics = numerics or NumericsConfig()
    numerics = numerics.model_copy(update={"plateau_tol": max(numerics.plateau_tol, numerics.instability_tol)})
    return solve_with_extension(partial(_solve_on_mesh, model=model), channel, numerics)
