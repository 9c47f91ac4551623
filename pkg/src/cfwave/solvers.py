"""
Dispatch from solver identifiers to the solver implementations.
"""

from cfwave.baselines import solve_local_exchange, solve_mcdmm
from cfwave.canonical import solve_kftee
from cfwave.foundation.config import NumericsConfig, SolverId
from cfwave.phaseshift import PhaseShiftResult, SolverOutput
from cfwave.potentials import ChannelSpec, ExchangeModel


def solve_channel(
    channel: ChannelSpec,
    solver: SolverId | str = SolverId.KFTEE,
    numerics: NumericsConfig | None = None,
) -> SolverOutput:
    """
    Run one solver on one channel.

    Returns:
        SolverOutput with the result and the normalized wave

    Raises:
        CFWaveError: Any numerical failure of the solver
    """
    solver = SolverId(solver)
    numerics = numerics or NumericsConfig()
    if solver is SolverId.KFTEE:
        return solve_kftee(channel, numerics)
    if solver is SolverId.MCDMM:
        return solve_mcdmm(channel, numerics)
    model = ExchangeModel.FMCCLE if solver is SolverId.FMCC else ExchangeModel.BNLE
    return solve_local_exchange(channel, model, numerics)


def run_solver(
    channel: ChannelSpec,
    solver: SolverId | str = SolverId.KFTEE,
    numerics: NumericsConfig | None = None,
) -> PhaseShiftResult:
    """
    Phase shift of one channel from one solver.

    Example:
        ```python
        run_solver(ChannelSpec(k=0.5, l=0, S=0), "kftee").delta  # ~1.1683
        ```
    """
    return solve_channel(channel, solver, numerics).result
