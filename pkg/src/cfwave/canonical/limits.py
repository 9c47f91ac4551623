"""
Origin limits Lambda and lambda of the canonical basis.

Regularity at r = 0 fixes the initial derivatives at r0 in terms of the
initial values: Y'(r0) = Lambda Y(r0) + lambda A. The limits are estimated at
a decreasing sequence of radii epsilon and accepted once consecutive
estimates agree. Individual entries of alpha and beta may diverge like
epsilon^{-l'}; only the combinations converge.

Modes:
    value    Lambda(eps) = -beta^-1 alpha, lambda(eps) = -beta^-1 sigma
    regular  the regular log-derivative M = diag((l'+1)/eps + a_F, (l'+1)/eps)
             is imposed: Lambda(eps) = -(beta' - M beta)^-1 (alpha' - M alpha),
             and likewise for lambda with sigma; converges as O(eps^2)
"""

from collections.abc import Sequence
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from cfwave.foundation.config import OriginMode
from cfwave.foundation.exceptions import ConvergenceError, SingularMatrixError
from cfwave.foundation.logging import get_logger

from .basis import CanonicalBasis

logger = get_logger(__name__)

_MAX_CONDITION = 1e14


@dataclass(frozen=True, eq=False)
class OriginLimits:
    """
    Converged origin limits.

    Attributes:
        Lambda: 2x2 matrix with Y'(r0) = Lambda Y(r0) (homogeneous part)
        lambda_vec: 2-vector multiplying A in Y'(r0)
        epsilon_trace: (epsilon, relative change from the previous estimate)
        estimates: Lambda(eps) for every epsilon, shape (m, 2, 2)
    """

    Lambda: NDArray[np.float64]
    lambda_vec: NDArray[np.float64]
    epsilon_trace: list[tuple[float, float]] = field(default_factory=list)
    estimates: NDArray[np.float64] | None = None


def _log_derivative(l: int, eps: float, static: bool) -> NDArray[np.float64]:
    # F ~ r^{l+1}(1 - r/(l+1)) under the -2/r nuclear attraction; G ~ r^{l+1}
    a_f = -1.0 / (l + 1) if static else 0.0
    return np.diag([(l + 1) / eps + a_f, (l + 1) / eps])


def _solve(matrix: NDArray[np.float64], rhs: NDArray[np.float64], eps: float) -> NDArray[np.float64]:
    condition = float(np.linalg.cond(matrix))
    if not np.isfinite(condition) or condition > _MAX_CONDITION:
        raise SingularMatrixError(
            error_code="NUM-006",
            module="canonical.limits",
            message=f"beta block is singular at epsilon = {eps:.1e}",
            radius=eps,
            condition=condition,
        )
    return np.linalg.solve(matrix, rhs)


def origin_limits(
    basis: CanonicalBasis,
    epsilons: Sequence[float],
    mode: OriginMode | str = OriginMode.REGULAR,
    tolerance: float = 1e-6,
    static: bool = True,
) -> OriginLimits:
    """
    Estimate Lambda and lambda on the epsilon sequence and take the limit.

    Args:
        basis: Canonical basis sampled down to the smallest epsilon
        epsilons: Strictly decreasing radii
        mode: Origin condition (``value`` or ``regular``)
        tolerance: Accepted relative max-norm change between the last two estimates
        static: Whether the nuclear attraction is present (shifts the regular
            log-derivative of F)

    Returns:
        OriginLimits at the smallest epsilon

    Raises:
        SingularMatrixError: If the beta block cannot be inverted
        ConvergenceError: If the last change exceeds ``tolerance``
    """
    mode = OriginMode(mode)
    l = basis.channel.l
    trace: list[tuple[float, float]] = []
    estimates: list[NDArray[np.float64]] = []
    previous: NDArray[np.float64] | None = None
    Lambda = lam = None

    for eps in epsilons:
        i = basis.index(eps)
        alpha, beta, sigma = basis.alpha[i], basis.beta[i], basis.sigma[i]
        if mode is OriginMode.VALUE:
            lhs = beta
            rhs = np.column_stack((alpha, sigma))
        else:
            M = _log_derivative(l, float(basis.r[i]), static)
            lhs = basis.beta_prime[i] - M @ beta
            rhs = np.column_stack((basis.alpha_prime[i] - M @ alpha, basis.sigma_prime[i] - M @ sigma))

        combined = -_solve(lhs, rhs, float(eps))
        Lambda, lam = combined[:, :2], combined[:, 2]
        estimates.append(Lambda)

        if previous is None:
            change = float("inf")
        else:
            scale = max(float(np.max(np.abs(combined))), 1e-300)
            change = float(np.max(np.abs(combined - previous))) / scale
        trace.append((float(eps), change))
        previous = combined

    last_change = trace[-1][1]
    if not last_change < tolerance:
        raise ConvergenceError(
            error_code="NUM-005",
            module="canonical.limits",
            message=(
                f"Origin limit did not converge for {basis.channel.label}: "
                f"last relative change {last_change:.2e} > {tolerance:.1e}"
            ),
            channel=basis.channel.label,
            epsilon_trace=trace,
            tolerance=tolerance,
        )

    logger.debug(
        "origin limits converged",
        extra={"channel": basis.channel.label, "mode": mode.value, "change": last_change},
    )
    assert Lambda is not None and lam is not None
    return OriginLimits(
        Lambda=Lambda,
        lambda_vec=lam,
        epsilon_trace=trace,
        estimates=np.array(estimates),
    )
