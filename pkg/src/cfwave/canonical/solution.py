"""
Physical solution from the canonical basis.

    phi   = alpha + beta Lambda          (regular homogeneous pair)
    gamma = beta lambda + sigma          (regular particular solution)
    (F, G) = Y1 [phi_1 + A1 gamma] + Y2 [phi_2 + A2 gamma],  Y = (F(r0), G(r0))

A1, A2 close the exchange constant A = kappa int R_10 F (l' = 0 only), and
D = Y2 / Y1 makes G vanish at the ratio radius (value mode) or removes its
r^{l'+1} growth at the mesh end (growth mode).
"""

from dataclasses import dataclass, field, replace

import numpy as np
from numpy.typing import NDArray
from scipy.integrate import simpson

from cfwave.foundation.config import RatioMode
from cfwave.foundation.exceptions import NoPlateauError, ResonanceDenominatorError
from cfwave.foundation.logging import get_logger
from cfwave.phaseshift import phase_spread
from cfwave.potentials import ChannelSpec, orbital

from .basis import CanonicalBasis
from .limits import OriginLimits

logger = get_logger(__name__)

RELIABILITY_LIMIT = 1e5
"""Cancellation ratio above which an assembled sample has lost five digits"""


@dataclass(frozen=True, eq=False)
class RegularPair:
    """phi (n, 2, 2), gamma (n, 2) and their derivatives on the basis radii."""

    r: NDArray[np.float64]
    phi: NDArray[np.float64]
    phi_prime: NDArray[np.float64]
    gamma: NDArray[np.float64]
    gamma_prime: NDArray[np.float64]


@dataclass(frozen=True, eq=False)
class AsymptoticRatio:
    """
    D = Y2 / Y1 with its convergence diagnostics.

    Attributes:
        value: D used for assembly
        spread: Spread over the window (rad in value mode, relative in growth mode)
        window: (first, last) radius of the window
        mode: Condition that fixed D
        literal_trace: -(phi_21 + A1 gamma_2) / (phi_22 + A2 gamma_2), the D that zeroes G at each radius
        growth_trace: D that removes the r^{l'+1} growth of G at each radius
    """

    value: float
    spread: float
    window: tuple[float, float]
    mode: RatioMode
    literal_trace: NDArray[np.float64]
    growth_trace: NDArray[np.float64]

    @property
    def trace(self) -> NDArray[np.float64]:
        """D(r) over the window under the active condition."""
        return self.literal_trace if self.mode is RatioMode.VALUE else self.growth_trace


@dataclass(frozen=True, eq=False)
class PhysicalSolution:
    """
    Assembled regular solution (F, G) = (f1, f2) on the basis radii.

    ``reliable`` is False where assembling the canonical combination lost
    more than five digits; those samples hold the matched r^{l'+1} law.
    """

    channel: ChannelSpec
    r: NDArray[np.float64]
    f: NDArray[np.float64]
    f_prime: NDArray[np.float64]
    A1: float
    A2: float
    D_inf: float
    f1_r0: float
    r0: float
    reliable: NDArray[np.bool_]
    on_grid: NDArray[np.bool_]
    ratio: AsymptoticRatio | None = None
    pair: RegularPair | None = field(default=None, repr=False)

    @property
    def f1(self) -> NDArray[np.float64]:
        return self.f[:, 0]

    @property
    def f1_prime(self) -> NDArray[np.float64]:
        return self.f_prime[:, 0]

    @property
    def f2(self) -> NDArray[np.float64]:
        return self.f[:, 1]

    @property
    def f2_prime(self) -> NDArray[np.float64]:
        return self.f_prime[:, 1]

    @property
    def exchange_constant(self) -> float:
        """A = A1 F(r0) + A2 G(r0)."""
        return self.f1_r0 * (self.A1 + self.D_inf * self.A2)

    def scaled(self, factor: float) -> "PhysicalSolution":
        """Same solution multiplied by ``factor``."""
        return replace(self, f=self.f * factor, f_prime=self.f_prime * factor, f1_r0=self.f1_r0 * factor)


def regular_pair(basis: CanonicalBasis, limits: OriginLimits) -> RegularPair:
    """Combine the basis with the origin limits into phi and gamma."""
    beta, beta_prime = basis.beta, basis.beta_prime
    phi = basis.alpha + beta @ limits.Lambda
    phi_prime = basis.alpha_prime + beta_prime @ limits.Lambda
    gamma = beta @ limits.lambda_vec + basis.sigma
    gamma_prime = beta_prime @ limits.lambda_vec + basis.sigma_prime
    return RegularPair(basis.r, phi, phi_prime, gamma, gamma_prime)


def orbital_overlap(r: NDArray[np.float64], values: NDArray[np.float64]) -> float:
    """int_0^r R_10 values dr with the origin sample (value 0) prepended."""
    x = np.concatenate(([0.0], r))
    y = np.concatenate(([0.0], orbital(r) * values))
    return float(simpson(y, x=x))


def exchange_constant(
    pair: RegularPair,
    channel: ChannelSpec,
    on_grid: NDArray[np.bool_],
    r_cut: float = 40.8,
    guard: float = 1e-10,
    exchange: bool = True,
) -> tuple[float, float]:
    """
    Coefficients (A1, A2) of the exchange constant.

    I1 = int R phi_11, I2 = int R phi_12, J = int R gamma_1 over (0, r_cut]
    on mesh points; A_i = kappa I_i / (1 - kappa J). Zero for l' > 0 or
    without exchange.

    Raises:
        ResonanceDenominatorError: If |1 - kappa J| < guard
    """
    if channel.l > 0 or not exchange:
        return 0.0, 0.0

    mask = on_grid & (pair.r <= r_cut * (1 + 1e-12))
    r = pair.r[mask]
    I1 = orbital_overlap(r, pair.phi[mask, 0, 0])
    I2 = orbital_overlap(r, pair.phi[mask, 0, 1])
    J = orbital_overlap(r, pair.gamma[mask, 0])

    kappa = channel.kappa
    denominator = 1.0 - kappa * J
    if abs(denominator) < guard:
        raise ResonanceDenominatorError(
            error_code="NUM-008",
            module="canonical.solution",
            message=f"1 - kappa J = {denominator:.3e} for {channel.label}",
            channel=channel.label,
            denominator=denominator,
        )
    return kappa * I1 / denominator, kappa * I2 / denominator


def growth_amplitude(g: NDArray[np.float64], g_prime: NDArray[np.float64], r: NDArray[np.float64], l: int) -> NDArray[np.float64]:
    """Coefficient of r^{l+1} in g = a r^{l+1} + b r^{-l} from value and slope."""
    return (l * g / r + g_prime) * r ** (-float(l)) / (2 * l + 1)


def relative_spread(values: NDArray[np.float64]) -> float:
    """(max - min) / max(|mean|, 1e-14)."""
    if values.size == 0:
        return 0.0
    return float((np.max(values) - np.min(values)) / max(abs(float(np.mean(values))), 1e-14))


def asymptotic_ratio(
    pair: RegularPair,
    A1: float,
    A2: float,
    channel: ChannelSpec,
    on_grid: NDArray[np.bool_],
    window: int = 50,
    tolerance: float = 1e-2,
    mode: RatioMode | str = RatioMode.VALUE,
) -> AsymptoticRatio:
    """
    D over the trailing window of mesh points.

    In value mode D makes G vanish at the last mesh point and the window is
    judged by the spread of arctan D(r) in radians. In growth mode D is the
    window mean of the ratio that removes the r^{l'+1} growth of G, judged
    by its relative spread.

    Raises:
        NoPlateauError: If the spread over the window exceeds ``tolerance``
    """
    mode = RatioMode(mode)
    index = np.flatnonzero(on_grid)[-window:]
    r = pair.r[index]
    g_a = pair.phi[index, 1, 0] + A1 * pair.gamma[index, 1]
    g_b = pair.phi[index, 1, 1] + A2 * pair.gamma[index, 1]
    dg_a = pair.phi_prime[index, 1, 0] + A1 * pair.gamma_prime[index, 1]
    dg_b = pair.phi_prime[index, 1, 1] + A2 * pair.gamma_prime[index, 1]

    l = channel.l
    with np.errstate(divide="ignore", invalid="ignore"):
        growth = -growth_amplitude(g_a, dg_a, r, l) / growth_amplitude(g_b, dg_b, r, l)
        literal = -g_a / g_b

    if mode is RatioMode.VALUE:
        spread = phase_spread(np.arctan2(-g_a, g_b))
        value = float(literal[-1])
    else:
        spread = relative_spread(growth)
        value = float(np.mean(growth))

    if not spread < tolerance or not np.isfinite(value):
        raise NoPlateauError(
            error_code="NUM-007",
            module="canonical.solution",
            message=f"D(r) did not settle for {channel.label}: spread {spread:.2e} ({mode.value} mode)",
            channel=channel.label,
            quantity="D",
            mode=mode.value,
            spread=spread,
            tolerance=tolerance,
            r_max=float(r[-1]),
        )
    return AsymptoticRatio(
        value=value,
        spread=spread,
        window=(float(r[0]), float(r[-1])),
        mode=mode,
        literal_trace=literal,
        growth_trace=growth,
    )


def _cancellation_ratio(
    parts: NDArray[np.float64], total: NDArray[np.float64], total_prime: NDArray[np.float64], r: NDArray[np.float64], l: int
) -> NDArray[np.float64]:
    scale = np.abs(total) + np.abs(r * total_prime) / (l + 1)
    with np.errstate(divide="ignore", invalid="ignore"):
        ratio = parts / scale
    return np.where(np.isfinite(ratio), ratio, np.inf)


def assemble_f1(
    basis: CanonicalBasis,
    limits: OriginLimits,
    pair: RegularPair,
    A1: float,
    A2: float,
    ratio: AsymptoticRatio | float,
    f1_r0: float = 1.0,
) -> PhysicalSolution:
    """
    Assemble (f1, f2) = f1(r0) {[phi_1 + A1 gamma] + D [phi_2 + A2 gamma]}.

    Samples inside r0 where the combination cancels beyond five digits are
    replaced by the regular power law matched at the innermost reliable
    sample.
    """
    D = ratio.value if isinstance(ratio, AsymptoticRatio) else float(ratio)
    Y = f1_r0 * np.array([1.0, D])
    A = float(A1 * Y[0] + A2 * Y[1])
    Y_prime = limits.Lambda @ Y + limits.lambda_vec * A

    f = pair.phi @ Y + A * pair.gamma
    f_prime = pair.phi_prime @ Y + A * pair.gamma_prime

    # magnitude of the individual terms of alpha Y + beta Y' + A sigma
    parts = np.abs(basis.alpha) @ np.abs(Y) + np.abs(basis.beta) @ np.abs(Y_prime) + abs(A) * np.abs(basis.sigma)
    l = basis.channel.l
    inner = basis.r < basis.r0
    reliable = np.ones_like(basis.r, dtype=bool)
    for row in range(2):
        bad = inner & (_cancellation_ratio(parts[:, row], f[:, row], f_prime[:, row], basis.r, l) > RELIABILITY_LIMIT)
        if np.any(bad):
            cut = int(np.max(np.flatnonzero(bad))) + 1
            law = (basis.r[:cut] / basis.r[cut]) ** (l + 1)
            f[:cut, row] = f[cut, row] * law
            f_prime[:cut, row] = (l + 1) / basis.r[:cut] * f[:cut, row]
            reliable[:cut] = False

    if not np.all(reliable):
        logger.debug(
            "replaced unreliable inner samples",
            extra={"channel": basis.channel.label, "r_reliable": float(basis.r[np.argmax(reliable)])},
        )
    return PhysicalSolution(
        channel=basis.channel,
        r=basis.r,
        f=f,
        f_prime=f_prime,
        A1=float(A1),
        A2=float(A2),
        D_inf=float(D),
        f1_r0=float(f1_r0),
        r0=basis.r0,
        reliable=reliable,
        on_grid=basis.on_grid,
        ratio=ratio if isinstance(ratio, AsymptoticRatio) else None,
        pair=pair,
    )
