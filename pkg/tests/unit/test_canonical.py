"""
Tests for the canonical-function construction.
"""

import numpy as np
import pytest

from cfwave.canonical import (
    RELIABILITY_LIMIT,
    asymptotic_ratio,
    build_basis,
    exchange_constant,
    growth_amplitude,
    orbital_overlap,
    origin_limits,
    physical_solution,
    regular_pair,
    relative_spread,
)
from cfwave.foundation.config import NumericsConfig, OriginMode, RatioMode, SolverId
from cfwave.foundation.exceptions import ConvergenceError, NoPlateauError, ResonanceDenominatorError
from cfwave.ode import grid_from_numerics
from cfwave.phaseshift import ContinuumWave, finish_channel
from cfwave.potentials import ChannelSpec, coupled_coefficients, orbital

NUMERICS = NumericsConfig()
SINGLET_S = ChannelSpec(k=0.5, l=0, S=0)


@pytest.fixture(scope="module")
def basis():
    """Canonical basis of the singlet s-wave at k = 0.5."""
    grid = grid_from_numerics(NUMERICS)
    coeffs = coupled_coefficients(SINGLET_S, NUMERICS)
    return build_basis(coeffs, SINGLET_S, grid, NUMERICS.r0, NUMERICS)


@pytest.fixture(scope="module")
def limits(basis):
    """Origin limits of the shared basis."""
    return origin_limits(basis, NUMERICS.epsilons, NUMERICS.origin_mode, NUMERICS.origin_tol)


@pytest.fixture(scope="module")
def solution():
    """Assembled physical solution of the shared channel."""
    return physical_solution(SINGLET_S, NUMERICS)


class TestCanonicalBasis:
    """Tests for the canonical basis."""

    def test_initial_conditions(self, basis):
        """Test alpha = I, beta' = I and vanishing sigma at r0."""
        i = basis.r0_index

        assert basis.r[i] == pytest.approx(grid_from_numerics(NUMERICS).snap(NUMERICS.r0))
        assert basis.r[i] == pytest.approx(1.002)
        np.testing.assert_allclose(basis.alpha[i], np.eye(2), atol=1e-14)
        np.testing.assert_allclose(basis.alpha_prime[i], 0.0, atol=1e-14)
        np.testing.assert_allclose(basis.beta[i], 0.0, atol=1e-14)
        np.testing.assert_allclose(basis.beta_prime[i], np.eye(2), atol=1e-14)
        np.testing.assert_allclose(basis.sigma[i], 0.0, atol=1e-14)

    def test_fundamental_determinant(self, basis):
        """Test det [[alpha, beta], [alpha', beta']] stays 1 on both sides of r0."""
        for radius in (0.01, 0.3, 2.0, 10.0, 40.8):
            i = basis.index(radius)
            assert np.linalg.det(basis.fundamental(i)) == pytest.approx(1.0, rel=1e-6)

    def test_sample_layout(self, basis):
        """Test samples span r_min to r_max and include the epsilons."""
        assert basis.r[0] == pytest.approx(NUMERICS.r_min)
        assert basis.r[-1] == pytest.approx(NUMERICS.r_max)
        assert np.all(np.diff(basis.r) > 0)
        for eps in NUMERICS.epsilons:
            assert np.min(np.abs(basis.r - eps)) < 1e-15
        assert basis.on_grid.sum() == len(grid_from_numerics(NUMERICS))


class TestOriginLimits:
    """Tests for the origin limits."""

    def test_converged(self, limits):
        """Test the last relative change is below the tolerance."""
        assert limits.epsilon_trace[-1][1] < NUMERICS.origin_tol
        assert limits.estimates.shape == (len(NUMERICS.epsilons), 2, 2)

    def test_value_mode_agrees(self, basis, limits):
        """Test the value condition converges to the same limit."""
        value = origin_limits(basis, NUMERICS.epsilons, OriginMode.VALUE, tolerance=1e-2)

        np.testing.assert_allclose(value.Lambda, limits.Lambda, rtol=1e-2, atol=1e-3)

    def test_regular_solution_vanishes(self, basis, limits):
        """Test phi = alpha + beta Lambda vanishes like r^{l+1} at the origin."""
        pair = regular_pair(basis, limits)
        i = basis.index(1e-3)

        assert np.max(np.abs(pair.phi[i])) < 1e-2

    def test_unconverged(self, basis):
        """Test an unreachable tolerance raises ConvergenceError with the trace."""
        with pytest.raises(ConvergenceError, match="NUM-005") as exc_info:
            origin_limits(basis, NUMERICS.epsilons, tolerance=1e-300)
        assert len(exc_info.value.context["epsilon_trace"]) == len(NUMERICS.epsilons)


class TestExchangeConstant:
    """Tests for the exchange constant and the D ratio."""

    def test_self_consistent(self, solution):
        """Test A = kappa int R_10 F dr for the assembled solution."""
        mesh = solution.on_grid & (solution.r <= NUMERICS.r_cut + 1e-9)
        overlap = orbital_overlap(solution.r[mesh], solution.f1[mesh])

        assert solution.exchange_constant == pytest.approx(SINGLET_S.kappa * overlap, rel=1e-6)

    def test_zero_beyond_s_wave(self, basis, limits):
        """Test A1 = A2 = 0 for l > 0 and without exchange."""
        pair = regular_pair(basis, limits)
        p_wave = ChannelSpec(k=0.5, l=1, S=0)

        assert exchange_constant(pair, p_wave, basis.on_grid) == (0.0, 0.0)
        assert exchange_constant(pair, SINGLET_S, basis.on_grid, exchange=False) == (0.0, 0.0)

    def test_resonance_guard(self, basis, limits):
        """Test a guard above |1 - kappa J| raises ResonanceDenominatorError."""
        pair = regular_pair(basis, limits)

        with pytest.raises(ResonanceDenominatorError, match="NUM-008"):
            exchange_constant(pair, SINGLET_S, basis.on_grid, guard=1e6)

    def test_overlap_quadrature(self):
        """Test the overlap integral of R_10 with itself."""
        r = np.linspace(0.01, 40.0, 4001)

        assert orbital_overlap(r, orbital(r)) == pytest.approx(1.0, rel=1e-6)

    def test_overlap_vanishes_at_ratio_radius(self, solution):
        """Test G vanishes at the ratio radius, where the canonical mesh ends."""
        assert solution.r[-1] == pytest.approx(NUMERICS.ratio_radius)
        assert abs(solution.f2[-1]) < 1e-10 * np.max(np.abs(solution.f2))
        assert solution.ratio is not None
        assert solution.ratio.mode is RatioMode.VALUE
        assert solution.ratio.value == solution.D_inf
        assert solution.ratio.spread < NUMERICS.ratio_tol

    def test_growth_mode(self):
        """Test growth mode leaves no r^{l+1} growth in G over the trailing window."""
        numerics = NumericsConfig(ratio_mode="growth")
        solution = physical_solution(SINGLET_S, numerics)
        tail = np.flatnonzero(solution.on_grid)[-numerics.plateau_window :]
        growth = growth_amplitude(solution.f2[tail], solution.f2_prime[tail], solution.r[tail], 0)

        assert solution.r[-1] == pytest.approx(numerics.r_max)
        assert np.max(np.abs(growth)) < 1e-6 * np.max(np.abs(solution.f1))
        assert solution.ratio.spread < numerics.plateau_tol
        np.testing.assert_array_equal(solution.ratio.trace, solution.ratio.growth_trace)

    def test_no_plateau(self, basis, limits):
        """Test an unreachable angle tolerance raises NoPlateauError."""
        pair = regular_pair(basis, limits)
        A1, A2 = exchange_constant(pair, SINGLET_S, basis.on_grid)

        with pytest.raises(NoPlateauError, match="NUM-007") as exc_info:
            asymptotic_ratio(pair, A1, A2, SINGLET_S, basis.on_grid, tolerance=1e-14, mode=RatioMode.VALUE)
        assert exc_info.value.context["quantity"] == "D"
        assert exc_info.value.context["mode"] == "value"


class TestPhysicalSolution:
    """Tests for the assembled solution."""

    def test_reliable_outside_r0(self, solution):
        """Test every sample beyond r0 is marked reliable."""
        assert np.all(solution.reliable[solution.r >= solution.r0])
        assert RELIABILITY_LIMIT == 1e5

    def test_regular_at_origin(self, solution):
        """Test f1 ~ r near the origin for the s-wave."""
        i, j = np.searchsorted(solution.r, [2e-3, 4e-3])
        ratio = solution.f1[j] / solution.f1[i]

        assert ratio == pytest.approx(solution.r[j] / solution.r[i], rel=2e-2)

    def test_scaled(self, solution):
        """Test scaling multiplies values, slopes and F(r0)."""
        scaled = solution.scaled(2.0)

        np.testing.assert_allclose(scaled.f, 2.0 * solution.f)
        assert scaled.f1_r0 == 2.0 * solution.f1_r0
        assert scaled.exchange_constant == pytest.approx(2.0 * solution.exchange_constant)

    def test_normalization_ignores_scale(self, solution):
        """Test doubling F(r0) leaves the phase and the normalized wave unchanged."""

        def finish(sol):
            mesh = sol.on_grid & (sol.r <= NUMERICS.r_max * (1 + 1e-12))
            wave = ContinuumWave(
                r=sol.r[mesh],
                f1=sol.f1[mesh],
                f1_prime=sol.f1_prime[mesh],
                f2=sol.f2[mesh],
                f2_prime=sol.f2_prime[mesh],
                reliable=sol.reliable[mesh],
            )
            return finish_channel(wave, SINGLET_S, NUMERICS, SolverId.KFTEE)

        base = finish(solution)
        doubled = finish(solution.scaled(2.0))

        assert doubled.result.delta == pytest.approx(base.result.delta, abs=1e-12)
        assert doubled.result.scale == pytest.approx(0.5 * base.result.scale, rel=1e-12)
        np.testing.assert_allclose(doubled.wave.f1, base.wave.f1, rtol=1e-10, atol=1e-14)

    def test_exchange_off_decouples(self):
        """Test G vanishes when exchange is switched off."""
        numerics = NumericsConfig(exchange=False)
        solution = physical_solution(ChannelSpec(k=0.5, l=1, S=0), numerics)

        assert solution.D_inf == pytest.approx(0.0, abs=1e-10)
        assert np.max(np.abs(solution.f2)) < 1e-8 * np.max(np.abs(solution.f1))


class TestRelativeSpread:
    """Tests for the window spread helper."""

    def test_spread(self):
        """Test (max - min) / |mean|."""
        assert relative_spread(np.array([1.0, 1.1, 0.9])) == pytest.approx(0.2)

    def test_empty(self):
        """Test an empty window has zero spread."""
        assert relative_spread(np.array([])) == 0.0
