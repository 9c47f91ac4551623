"""
Shared tail of every solver: Q plateau, branch, normalization, result.
"""

import math
from collections.abc import Callable

from cfwave.foundation.config import NumericsConfig, SolverId
from cfwave.foundation.exceptions import NoPlateauError
from cfwave.foundation.logging import get_logger
from cfwave.potentials import ChannelSpec

from .branch import resolve_branch
from .extraction import extract_phase
from .models import ContinuumWave, PhaseShiftResult, SolverOutput
from .normalization import normalize

logger = get_logger(__name__)


def finish_channel(
    wave: ContinuumWave,
    channel: ChannelSpec,
    numerics: NumericsConfig,
    solver: SolverId,
) -> SolverOutput:
    """
    Turn a raw regular solution into a phase-shift result and normalized wave.

    Args:
        wave: Unnormalized solution on ascending radii ending at the mesh end
        channel: Scattering channel
        numerics: Windows, tolerances, tail-correction switch
        solver: Solver identifier recorded in the result

    Raises:
        NoPlateauError: If Q(r) does not settle
        AmbiguousBranchError: If no matching radius avoids the nodes
    """
    window = extract_phase(wave.r, wave.f1, wave.f1_prime, channel, numerics)
    branch = resolve_branch(wave.r, wave.f1, wave.f1_prime, channel, window, reliable=wave.reliable)
    normalized, factor = normalize(wave, channel, window, branch.branch_n)

    result = PhaseShiftResult(
        channel=channel,
        solver=solver,
        h=numerics.h,
        tan_delta=math.tan(window.principal),
        delta=branch.delta,
        principal=window.principal,
        branch_n=branch.branch_n,
        scale=factor,
        q_trace=tuple(float(q) for q in window.q),
        plateau_spread=window.spread,
        tolerance=numerics.plateau_tol,
        converged=True,
        r_max=float(wave.r[-1]),
        r_match=branch.r_match,
    )
    logger.info("channel solved", extra=result.summary())
    return SolverOutput(result=result, wave=normalized)


def solve_with_extension(
    solve: Callable[[ChannelSpec, NumericsConfig], SolverOutput],
    channel: ChannelSpec,
    numerics: NumericsConfig,
) -> SolverOutput:
    """
    Run ``solve`` and repeat it once on the extended mesh if a plateau fails.

    The retry happens only when ``numerics.auto_extend`` is set and the mesh
    does not already reach ``numerics.extend_to``.
    """
    try:
        return solve(channel, numerics)
    except NoPlateauError as e:
        if not numerics.auto_extend or numerics.r_max >= numerics.extend_to:
            raise
        logger.info(
            "no plateau on r_max=%.1f, extending mesh to %.1f",
            numerics.r_max,
            numerics.extend_to,
            extra={"channel": channel.label, "quantity": e.context.get("quantity"), "spread": e.context.get("spread")},
        )
        return solve(channel, numerics.extended)
