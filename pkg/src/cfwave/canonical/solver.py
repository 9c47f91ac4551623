"""
Canonical-function solver with exact non-local exchange (KFTEE).
"""

from cfwave.foundation.config import NumericsConfig, RatioMode, SolverId
from cfwave.ode import grid_from_numerics
from cfwave.phaseshift import ContinuumWave, SolverOutput, finish_channel, solve_with_extension
from cfwave.potentials import ChannelSpec, coupled_coefficients

from .basis import build_basis
from .limits import origin_limits
from .solution import (
    PhysicalSolution,
    assemble_f1,
    asymptotic_ratio,
    exchange_constant,
    regular_pair,
)


def physical_solution(channel: ChannelSpec, numerics: NumericsConfig) -> PhysicalSolution:
    """
    Run the canonical construction on the mesh described by ``numerics``.

    In value mode the mesh reaches ``numerics.ratio_radius`` so that G can
    be made to vanish there.

    Raises:
        ConvergenceError, SingularMatrixError: Origin limit failures
        ResonanceDenominatorError: |1 - kappa J| below the guard
        NoPlateauError: D(r) did not settle
    """
    grid = grid_from_numerics(numerics, r_max=numerics.ratio_mesh_radius)
    coeffs = coupled_coefficients(channel, numerics)
    basis = build_basis(coeffs, channel, grid, numerics.r0, numerics)
    limits = origin_limits(
        basis,
        numerics.epsilons,
        mode=numerics.origin_mode,
        tolerance=numerics.origin_tol,
        static=numerics.static,
    )
    pair = regular_pair(basis, limits)
    A1, A2 = exchange_constant(
        pair,
        channel,
        basis.on_grid,
        r_cut=numerics.r_cut,
        guard=numerics.resonance_guard,
        exchange=numerics.exchange,
    )
    value_mode = numerics.ratio_mode is RatioMode.VALUE
    ratio = asymptotic_ratio(
        pair,
        A1,
        A2,
        channel,
        basis.on_grid,
        window=numerics.plateau_window,
        tolerance=numerics.ratio_tol if value_mode else numerics.plateau_tol,
        mode=numerics.ratio_mode,
    )
    return assemble_f1(basis, limits, pair, A1, A2, ratio)


def _solve_on_mesh(channel: ChannelSpec, numerics: NumericsConfig) -> SolverOutput:
    solution = physical_solution(channel, numerics)
    mesh = solution.on_grid & (solution.r <= numerics.r_max * (1 + 1e-12))
    wave = ContinuumWave(
        r=solution.r[mesh],
        f1=solution.f1[mesh],
        f1_prime=solution.f1_prime[mesh],
        f2=solution.f2[mesh],
        f2_prime=solution.f2_prime[mesh],
        reliable=solution.reliable[mesh],
    )
    return finish_channel(wave, channel, numerics, SolverId.KFTEE)


def solve_kftee(channel: ChannelSpec, numerics: NumericsConfig | None = None) -> SolverOutput:
    """
    Phase shift and normalized wave from the canonical-function method.

    The phase is read on the mesh up to ``numerics.r_max``. When D(r) or
    Q(r) fails to settle and ``numerics.auto_extend`` is set, the run is
    repeated with the phase read out to ``numerics.extend_to``.

    Example:
        ```python
        out = solve_kftee(ChannelSpec(k=0.5, l=1, S=1))
        out.result.delta  # ~0.31115
        ```
    """
    return solve_with_extension(_solve_on_mesh, channel, numerics or NumericsConfig())
