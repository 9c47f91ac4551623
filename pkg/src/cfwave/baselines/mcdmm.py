"""
Outward Numerov baseline for the coupled (F, G) system.

Three columns are launched at the first two mesh points with their leading
power only and propagated outward together:

    a: F = r^{l+1}, G = 0     (homogeneous)
    b: F = 0, G = r^{l+1}     (homogeneous)
    p: F = G = 0 at the origin, source W with A = 1

and combined as f = a + c b + A p. The coefficient c removes the r^{l+1}
growth of G; A closes A = kappa int R_10 F (l = 0 only). The phase comes
from pairs of mesh points half a matching window apart.
"""

import math

import numpy as np
from numpy.typing import NDArray

from cfwave.canonical import orbital_overlap
from cfwave.foundation.config import NumericsConfig, SolverId
from cfwave.foundation.exceptions import AmbiguousBranchError, SingularMatrixError
from cfwave.foundation.logging import get_logger
from cfwave.ode import finite_difference_derivative, grid_from_numerics, numerov_coupled
from cfwave.phaseshift import (
    ContinuumWave,
    PhaseShiftResult,
    PhaseWindow,
    SolverOutput,
    circular_mean,
    local_phase,
    normalize,
    phase_spread,
    q_function,
    resolve_branch,
    tail_phases,
    wrap_phase,
)
from cfwave.potentials import ChannelSpec, CoupledCoefficients, coupled_coefficients
from cfwave.special import riccati

logger = get_logger(__name__)


# ============================================================================
# Propagation
# ============================================================================


def _launch(coeffs: CoupledCoefficients, r: NDArray[np.float64]) -> NDArray[np.float64]:
    """(2, 2, 3) start values of the a, b, p columns at the first two radii."""
    l = coeffs.channel.l
    start = np.zeros((2, 2, 3))
    start[:, 0, 0] = r[:2] ** (l + 1)
    start[:, 1, 1] = r[:2] ** (l + 1)
    if l == 0 and coeffs.exchange:
        # F'' = W1 ~ 2 (-1)^{S+1} r
        start[:, 0, 2] = coeffs.exchange_sign * r[:2] ** 3 / 3.0
    return start


def propagate_columns(
    coeffs: CoupledCoefficients, r: NDArray[np.float64]
) -> tuple[NDArray[np.float64], NDArray[np.float64]]:
    """
    Numerov propagation of the a, b, p columns over ``r``.

    Returns:
        (values, derivatives), each (n, 2, 3)
    """
    V, W = coeffs.evaluate(r)
    source = np.zeros((r.size, 2, 3))
    source[:, :, 2] = W
    y = numerov_coupled(r, V, _launch(coeffs, r), source=source)
    return y, finite_difference_derivative(y, r)


def growth_coefficients(g: NDArray[np.float64], r: NDArray[np.float64], i: int, j: int, l: int) -> NDArray[np.float64]:
    """
    Coefficient of r^{l+1} when g = alpha r^{l+1} + beta r^{-l} is fitted through radii i and j.

    Args:
        g: (n, m) sampled columns
    """
    ri, rj = r[i], r[j]
    det = ri ** (l + 1) * rj ** (-l) - rj ** (l + 1) * ri ** (-l)
    return (g[i] * rj ** (-l) - g[j] * ri ** (-l)) / det


def combine_columns(
    y: NDArray[np.float64],
    r: NDArray[np.float64],
    coeffs: CoupledCoefficients,
    numerics: NumericsConfig,
) -> tuple[float, float]:
    """
    Weights (c, A) of the b and p columns.

    Raises:
        SingularMatrixError: If the 2x2 matching system is singular
    """
    channel = coeffs.channel
    l = channel.l
    a_a, a_b, a_p = growth_coefficients(y[:, 1, :], r, r.size - numerics.plateau_window, r.size - 1, l)

    if l > 0 or not coeffs.exchange:
        return -a_a / a_b, 0.0

    inside = r <= numerics.r_cut * (1 + 1e-12)
    I_a, I_b, J = (orbital_overlap(r[inside], y[inside, 0, col]) for col in range(3))
    kappa = channel.kappa
    system = np.array([[a_b, a_p], [-kappa * I_b, 1.0 - kappa * J]])
    condition = float(np.linalg.cond(system))
    if not condition < 1e14:
        raise SingularMatrixError(
            error_code="NUM-006",
            module="baselines.mcdmm",
            message=f"Matching system singular for {channel.label} (cond {condition:.2e})",
            channel=channel.label,
            radius=float(r[-1]),
            condition=condition,
        )
    c, A = np.linalg.solve(system, [-a_a, kappa * I_a])
    return float(c), float(A)


# ============================================================================
# Two-point phase
# ============================================================================


def two_point_phases(
    r: NDArray[np.float64], f: NDArray[np.float64], channel: ChannelSpec, separation: int
) -> NDArray[np.float64]:
    """
    Phases from f = s cos(delta) + c sin(delta) imposed at points ``separation`` apart.

    Returns:
        One phase in (-pi/2, pi/2] per pair (r_i, r_{i+separation})
    """
    pair = riccati(channel.l, channel.k * r)
    i = np.arange(r.size - separation)
    j = i + separation
    numerator = f[j] * pair.s[i] - f[i] * pair.s[j]
    denominator = f[i] * pair.c[j] - f[j] * pair.c[i]
    return wrap_phase(np.arctan2(numerator, denominator))


def solve_mcdmm(channel: ChannelSpec, numerics: NumericsConfig | None = None) -> SolverOutput:
    """
    Phase shift of the coupled system by outward Numerov integration.

    The result is flagged unstable (and not converged) when the two-point
    phases spread beyond ``numerics.instability_tol`` over the window.

    Example:
        ```python
        out = solve_mcdmm(ChannelSpec(k=1.0, l=1, S=1))
        out.result.delta     # ~0.5032
        out.result.unstable  # False
        ```
    """
    numerics = numerics or NumericsConfig()
    grid = grid_from_numerics(numerics)
    r = grid.r
    coeffs = coupled_coefficients(channel, numerics)

    y, dy = propagate_columns(coeffs, r)
    c, A = combine_columns(y, r, coeffs, numerics)
    weights = np.array([1.0, c, A])
    f = y @ weights
    f_prime = dy @ weights

    size = numerics.matching_window
    half = size // 2
    r_win = r[-size:]
    f_win, fp_win = f[-size:, 0], f_prime[-size:, 0]

    local = local_phase(f_win, fp_win, r_win, channel)
    pairs = two_point_phases(r_win, f_win, channel, half)
    tail = np.zeros_like(r_win)
    if numerics.tail_correction and numerics.polarization:
        tail = tail_phases(channel, float(circular_mean(pairs)), r_win)
    pairs = wrap_phase(pairs + 0.5 * (tail[: pairs.size] + tail[half : half + pairs.size]))

    principal = circular_mean(pairs)
    spread = phase_spread(pairs)
    converged = spread <= numerics.instability_tol
    plateau = min(numerics.plateau_window, size)
    window = PhaseWindow(
        r=r_win,
        local=local,
        corrected=wrap_phase(local + tail),
        q=np.asarray(q_function(f_win[-plateau:], fp_win[-plateau:], r_win[-plateau:], channel)),
        principal=principal,
        spread=spread,
        plateau=plateau,
    )

    try:
        branch_n = resolve_branch(r, f[:, 0], f_prime[:, 0], channel, window).branch_n
    except AmbiguousBranchError:
        if converged:
            raise
        branch_n = 0

    wave = ContinuumWave(
        r=r,
        f1=f[:, 0],
        f1_prime=f_prime[:, 0],
        f2=f[:, 1],
        f2_prime=f_prime[:, 1],
        reliable=np.ones(r.size, dtype=bool),
    )
    normalized, factor = normalize(wave, channel, window, branch_n)

    result = PhaseShiftResult(
        channel=channel,
        solver=SolverId.MCDMM,
        h=numerics.h,
        tan_delta=math.tan(principal),
        delta=principal + branch_n * math.pi,
        principal=principal,
        branch_n=branch_n,
        scale=factor,
        q_trace=tuple(float(q) for q in window.q),
        plateau_spread=spread,
        tolerance=numerics.instability_tol,
        converged=converged,
        unstable=not converged,
        r_max=float(r[-1]),
    )
    if converged:
        logger.info("channel solved", extra=result.summary())
    else:
        logger.warning("two-point phases unstable", extra=result.summary())
    return SolverOutput(result=result, wave=normalized)
