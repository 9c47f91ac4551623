"""
Tests for phase extraction, branch resolution, normalization and the solver tail.
"""

import math

import numpy as np
import pytest
from pydantic import ValidationError

from cfwave.foundation.config import NumericsConfig, SolverId
from cfwave.foundation.exceptions import AmbiguousBranchError, NoPlateauError
from cfwave.ode import build_grid
from cfwave.phaseshift import (
    NORMALIZATION,
    ContinuumWave,
    PhaseShiftResult,
    SolverOutput,
    circular_mean,
    count_nodes,
    extract_phase,
    far_radius,
    finish_channel,
    local_phase,
    phase_spread,
    q_function,
    resolve_branch,
    solve_with_extension,
    tail_phase,
    tail_phases,
    wrap_phase,
)
from cfwave.potentials import ChannelSpec
from cfwave.special import riccati

NO_TAIL = NumericsConfig(tail_correction=False)


def free_wave(channel: ChannelSpec, delta: float, r: np.ndarray, amplitude: float = 1.0):
    """s_l cos(delta) + c_l sin(delta) and its r-derivative."""
    pair = riccati(channel.l, channel.k * r)
    f = amplitude * (pair.s * math.cos(delta) + pair.c * math.sin(delta))
    fp = amplitude * channel.k * (pair.s_prime * math.cos(delta) + pair.c_prime * math.sin(delta))
    return f, fp


def shifted_sine(k: float, delta: float, r: np.ndarray, amplitude: float = 1.0):
    """sin(kr + delta): an s-wave with the node structure of a regular solution for delta in (0, pi)."""
    return amplitude * np.sin(k * r + delta), amplitude * k * np.cos(k * r + delta)


def regular_sine(k: float, delta: float, r: np.ndarray, width: float = 0.5):
    """sin(kr + delta (1 - e^{-r/width})): vanishes at the origin and gains delta within a few widths."""
    decay = np.exp(-r / width)
    phase = k * r + delta * (1.0 - decay)
    return np.sin(phase), (k + delta * decay / width) * np.cos(phase)


class TestQFunction:
    """Tests for Q(r) and the local phase."""

    @pytest.mark.parametrize("l", [0, 1, 3])
    @pytest.mark.parametrize("delta", [-1.2, -0.3, 0.0, 0.4, 1.5])
    def test_free_wave(self, l, delta):
        """Test Q = tan(delta) for a free wave at any radius."""
        channel = ChannelSpec(k=0.7, l=l)
        r = np.array([2.0, 9.5, 31.0])
        f, fp = free_wave(channel, delta, r)

        np.testing.assert_allclose(q_function(f, fp, r, channel), math.tan(delta), rtol=1e-9, atol=1e-12)
        np.testing.assert_allclose(local_phase(f, fp, r, channel), delta, atol=1e-10)

    def test_regular_free_wave_zero(self):
        """Test Q vanishes for f1 = s_l."""
        channel = ChannelSpec(k=0.5)
        pair = riccati(0, 0.5 * 20.0)

        assert q_function(pair.s, 0.5 * pair.s_prime, 20.0, channel) == pytest.approx(0.0, abs=1e-14)

    def test_half_pi(self):
        """Test the local phase is pi/2 where Q is infinite."""
        channel = ChannelSpec(k=0.5, l=1)
        r = np.array([12.0])
        f, fp = free_wave(channel, math.pi / 2, r)

        assert abs(float(local_phase(f, fp, r, channel)[0])) == pytest.approx(math.pi / 2, abs=1e-10)


class TestAngles:
    """Tests for angle helpers modulo pi."""

    @pytest.mark.parametrize(
        "angle, expected",
        [(0.3, 0.3), (0.3 + math.pi, 0.3), (-2.0, math.pi - 2.0), (math.pi / 2, math.pi / 2), (-math.pi / 2, math.pi / 2)],
    )
    def test_wrap_phase(self, angle, expected):
        """Test reduction to (-pi/2, pi/2]."""
        assert float(wrap_phase(angle)) == pytest.approx(expected, abs=1e-14)

    def test_circular_mean_across_cut(self):
        """Test the mean of angles straddling +-pi/2."""
        angles = np.array([math.pi / 2 - 0.01, -math.pi / 2 + 0.01])

        assert abs(circular_mean(angles)) == pytest.approx(math.pi / 2, abs=1e-12)
        assert phase_spread(angles) == pytest.approx(0.02, abs=1e-12)

    def test_spread_empty(self):
        """Test an empty window has zero spread."""
        assert phase_spread(np.array([])) == 0.0

    def test_count_nodes(self):
        """Test sign changes with exact zeros skipped."""
        assert count_nodes(np.array([1.0, 0.0, -1.0, -2.0, 3.0, 0.0, 4.0])) == 2


class TestTail:
    """Tests for the polarization tail correction."""

    def test_asymptotic_size(self):
        """Test the correction approaches 0.75 / (k R^3) at large R."""
        channel = ChannelSpec(k=0.5, l=0)
        R = 80.0

        assert tail_phase(channel, 0.3, R) == pytest.approx(0.75 / (channel.k * R**3), rel=0.1)

    def test_window_consistent(self):
        """Test the window version matches single-radius evaluations."""
        channel = ChannelSpec(k=0.8, l=1)
        radii = np.linspace(38.4, 40.8, 101)
        window = tail_phases(channel, 0.2, radii)

        assert window[-1] == pytest.approx(tail_phase(channel, 0.2, 40.8), rel=1e-12)
        assert window[0] == pytest.approx(tail_phase(channel, 0.2, 38.4), rel=1e-4)

    def test_far_radius(self):
        """Test the far radius is at least twice the matching radius."""
        assert far_radius(1e6, 40.0) == 80.0
        assert far_radius(0.1, 40.0) > 1000.0


class TestExtractPhase:
    """Tests for the plateau phase."""

    def test_free_wave_plateau(self):
        """Test a free wave gives its phase with zero spread."""
        channel = ChannelSpec(k=0.6, l=2)
        r = build_grid(0.006).r
        f, fp = free_wave(channel, 0.25, r)
        window = extract_phase(r, f, fp, channel, NO_TAIL)

        assert window.principal == pytest.approx(0.25, abs=1e-10)
        assert window.spread < 1e-10
        assert window.r.size == NO_TAIL.matching_window
        assert window.q.size == NO_TAIL.plateau_window
        assert window.tan_delta == pytest.approx(math.tan(0.25))

    def test_drifting_phase(self):
        """Test a phase that drifts across the window raises NoPlateauError."""
        channel = ChannelSpec(k=0.6)
        r = build_grid(0.006).r
        drift = 1e-4 * (r - r[0])
        f = np.sin(channel.k * r + 0.4 + drift)
        fp = (channel.k + 1e-4) * np.cos(channel.k * r + 0.4 + drift)

        with pytest.raises(NoPlateauError, match="NUM-007") as exc_info:
            extract_phase(r, f, fp, channel, NO_TAIL)
        assert exc_info.value.context["quantity"] == "Q"

    def test_without_requirement(self):
        """Test require_plateau=False returns the window anyway."""
        channel = ChannelSpec(k=0.6)
        r = build_grid(0.006).r
        drift = 1e-4 * (r - r[0])
        f = np.sin(channel.k * r + 0.4 + drift)
        fp = (channel.k + 1e-4) * np.cos(channel.k * r + 0.4 + drift)

        window = extract_phase(r, f, fp, channel, NO_TAIL, require_plateau=False)
        assert window.spread > NO_TAIL.plateau_tol


class TestBranch:
    """Tests for node-counting branch resolution."""

    @pytest.mark.parametrize("delta, n", [(0.4, 0), (2.0, 1), (2.0 + math.pi, 2)])
    def test_branch(self, delta, n):
        """Test the multiple of pi is recovered from the node count."""
        channel = ChannelSpec(k=0.5)
        r = build_grid(0.006).r
        f, fp = regular_sine(channel.k, delta, r)
        window = extract_phase(r, f, fp, channel, NO_TAIL)

        branch = resolve_branch(r, f, fp, channel, window)
        assert branch.branch_n == n
        assert branch.delta == pytest.approx(delta, abs=1e-10)
        assert math.tan(branch.delta) == pytest.approx(window.tan_delta, rel=1e-8)

    def test_ambiguous(self):
        """Test a window sitting on nodes raises AmbiguousBranchError."""
        channel = ChannelSpec(k=0.5)
        r = build_grid(0.006).r
        f, fp = shifted_sine(channel.k, 0.4, r)
        window = extract_phase(r, f, fp, channel, NO_TAIL)

        with pytest.raises(AmbiguousBranchError, match="NUM-009"):
            resolve_branch(r, np.zeros_like(f), fp, channel, window)


class TestFinishChannel:
    """Tests for the shared solver tail."""

    def test_result_and_normalization(self):
        """Test the result fields and the sqrt(2/pi) amplitude of the wave."""
        channel = ChannelSpec(k=0.5)
        r = build_grid(0.006).r
        f, fp = shifted_sine(channel.k, 2.0, r, amplitude=3.0)
        wave = ContinuumWave.single_channel(r, f, fp)

        out = finish_channel(wave, channel, NO_TAIL, SolverId.FMCC)
        result = out.result
        assert result.delta == pytest.approx(2.0, abs=1e-10)
        assert result.branch_n == 1
        assert result.principal == pytest.approx(2.0 - math.pi, abs=1e-10)
        assert result.converged and not result.unstable
        assert result.r_max == pytest.approx(40.8)
        assert result.scale == pytest.approx(NORMALIZATION / 3.0, rel=1e-10)
        np.testing.assert_allclose(out.wave.f1, NORMALIZATION * np.sin(channel.k * r + 2.0), atol=1e-10)
        np.testing.assert_array_equal(out.wave.f2, 0.0)

    def test_negative_amplitude(self):
        """Test the normalized wave has the sign fixed by the branch."""
        channel = ChannelSpec(k=0.5)
        r = build_grid(0.006).r
        f, fp = shifted_sine(channel.k, 0.4, r, amplitude=-0.01)
        out = finish_channel(ContinuumWave.single_channel(r, f, fp), channel, NO_TAIL, SolverId.BN)

        np.testing.assert_allclose(out.wave.f1[-10:], NORMALIZATION * np.sin(channel.k * r[-10:] + 0.4), atol=1e-10)


class TestSolveWithExtension:
    """Tests for the automatic mesh extension."""

    @staticmethod
    def _solver(calls, settles_at=184.8):
        def solve(channel, numerics):
            calls.append(numerics.r_max)
            if numerics.r_max < settles_at:
                raise NoPlateauError(
                    error_code="NUM-007", module="test", message="no plateau", quantity="Q", spread=1e-6
                )
            return SolverOutput(
                result=PhaseShiftResult(
                    channel=channel, solver=SolverId.KFTEE, h=numerics.h, tan_delta=0.0, delta=0.0, principal=0.0
                )
            )

        return solve

    def test_extends_once(self):
        """Test a failed plateau is retried on the extended mesh."""
        calls = []
        out = solve_with_extension(self._solver(calls), ChannelSpec(k=0.1), NumericsConfig())

        assert calls == [40.8, 184.8]
        assert out.result.delta == 0.0

    def test_disabled(self):
        """Test auto_extend=False re-raises."""
        calls = []

        with pytest.raises(NoPlateauError):
            solve_with_extension(self._solver(calls), ChannelSpec(k=0.1), NumericsConfig(auto_extend=False))
        assert calls == [40.8]

    def test_already_extended(self):
        """Test a mesh already at extend_to is not retried."""
        calls = []
        numerics = NumericsConfig(r_max=100.0, extend_to=100.0)

        with pytest.raises(NoPlateauError):
            solve_with_extension(self._solver(calls, settles_at=math.inf), ChannelSpec(k=0.1), numerics)
        assert calls == [100.0]


class TestPhaseShiftResult:
    """Tests for the result model."""

    def test_tan_consistency(self):
        """Test tan(delta) must match tan_delta."""
        with pytest.raises(ValidationError, match="disagrees"):
            PhaseShiftResult(
                channel=ChannelSpec(k=0.5), solver=SolverId.KFTEE, h=0.006, tan_delta=1.0, delta=0.2, principal=0.2
            )

    def test_converged_spread(self):
        """Test a converged result cannot exceed its tolerance."""
        with pytest.raises(ValidationError, match="spread above tolerance"):
            PhaseShiftResult(
                channel=ChannelSpec(k=0.5),
                solver=SolverId.MCDMM,
                h=0.006,
                tan_delta=0.0,
                delta=0.0,
                principal=0.0,
                plateau_spread=1e-3,
                tolerance=1e-4,
            )

    def test_summary(self):
        """Test the flat logging summary."""
        result = PhaseShiftResult(
            channel=ChannelSpec(k=0.5, l=1, S=1),
            solver=SolverId.KFTEE,
            h=0.006,
            tan_delta=math.tan(0.3),
            delta=0.3 + math.pi,
            principal=0.3,
            branch_n=1,
        )

        assert result.summary()["channel"] == "k=0.5,l=1,S=1"
        assert result.summary()["branch"] == 1
        assert result.label == "k=0.5,l=1,S=1,kftee,h=0.006"
