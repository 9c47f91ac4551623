"""
Tests for the cfwave exception hierarchy.
"""

import pytest

from cfwave.foundation.exceptions import (
    AmbiguousBranchError,
    CFWaveError,
    ConfigError,
    ConvergenceError,
    DomainError,
    NoPlateauError,
    NumericalError,
    OverflowGuardError,
    ResonanceDenominatorError,
    SchemaError,
    SingularityError,
    SingularMatrixError,
    StepSizeError,
)


class TestCFWaveError:
    """Tests for the base exception class."""

    def test_instantiation(self):
        """Test basic exception instantiation."""
        error = CFWaveError(error_code="NUM-000", module="solvers", message="Solver failed")

        assert error.error_code == "NUM-000"
        assert error.module == "solvers"
        assert error.message == "Solver failed"
        assert error.context == {}

    def test_context_fields(self):
        """Test that extra keyword arguments land in the context."""
        error = CFWaveError(error_code="NUM-000", module="solvers", message="failed", k=0.5, l=2)

        assert error.context == {"k": 0.5, "l": 2}

    def test_str(self):
        """Test the "[module] CODE: message" rendering."""
        error = CFWaveError(error_code="CFG-002", module="config.manager", message="bad toml")

        assert str(error) == "[config.manager] CFG-002: bad toml"

    def test_repr_with_context(self):
        """Test repr includes class name and context."""
        error = CFWaveError(error_code="NUM-000", module="solvers", message="failed", k=0.5)

        text = repr(error)
        assert text.startswith("CFWaveError(")
        assert "error_code='NUM-000'" in text
        assert "k=0.5" in text

    def test_repr_without_context(self):
        """Test repr without context fields ends after the message."""
        error = CFWaveError(error_code="NUM-000", module="solvers", message="failed")

        assert repr(error).endswith("message='failed')")

    def test_to_dict(self):
        """Test serialization to a dictionary."""
        error = CFWaveError(error_code="NUM-000", module="solvers", message="failed", channel="k=0.5,l=0,S=0")

        data = error.to_dict()
        assert data["error_code"] == "NUM-000"
        assert data["module"] == "solvers"
        assert data["message"] == "failed"
        assert data["channel"] == "k=0.5,l=0,S=0"
        assert "T" in data["timestamp"]

    def test_can_be_raised(self):
        """Test the exception can be raised and caught."""
        with pytest.raises(CFWaveError, match="CFG-001"):
            raise CFWaveError(error_code="CFG-001", module="config", message="missing")


class TestNumericalErrors:
    """Tests for the numerical exception classes."""

    def test_numerical_error_channel(self):
        """Test the channel label is stored in the context."""
        error = NumericalError(error_code="NUM-000", module="solvers", message="x", channel="k=1,l=0,S=1")

        assert error.context["channel"] == "k=1,l=0,S=1"
        assert isinstance(error, CFWaveError)

    def test_domain_error_is_value_error(self):
        """Test DomainError is catchable as ValueError."""
        error = DomainError(
            error_code="NUM-001", module="special.riccati", message="rho must be positive", argument="rho", value=-1.0
        )

        assert isinstance(error, ValueError)
        assert isinstance(error, NumericalError)
        assert error.context["argument"] == "rho"
        assert error.context["value"] == -1.0

    def test_overflow_guard_error(self):
        """Test overflow context carries l and rho."""
        error = OverflowGuardError(error_code="NUM-002", module="special.riccati", message="overflow", l=40, rho=1e-6)

        assert error.context["l"] == 40
        assert error.context["rho"] == 1e-6

    def test_singularity_error(self):
        """Test the failing radius is recorded."""
        error = SingularityError(error_code="NUM-004", module="ode.integrators", message="nan", radius=0.0)

        assert error.context["radius"] == 0.0

    def test_convergence_error(self):
        """Test the epsilon trace is recorded."""
        trace = [(1e-2, 1e-3), (1e-3, 1e-5)]
        error = ConvergenceError(
            error_code="NUM-005", module="canonical.limits", message="no limit", epsilon_trace=trace, tolerance=1e-6
        )

        assert error.context["epsilon_trace"] == trace
        assert error.context["tolerance"] == 1e-6

    def test_singular_matrix_error(self):
        """Test the radius and condition are recorded."""
        error = SingularMatrixError(
            error_code="NUM-006", module="canonical.solution", message="singular", radius=1.0, condition=1e16
        )

        assert error.context["condition"] == 1e16

    def test_no_plateau_error(self):
        """Test the plateau context."""
        error = NoPlateauError(
            error_code="NUM-007",
            module="phaseshift.extraction",
            message="Q did not settle",
            quantity="Q",
            spread=3.2e-7,
            tolerance=1e-8,
            r_max=40.8,
        )

        assert error.context["quantity"] == "Q"
        assert error.context["spread"] == 3.2e-7
        assert error.context["r_max"] == 40.8

    def test_resonance_denominator_error(self):
        """Test the denominator is recorded."""
        error = ResonanceDenominatorError(
            error_code="NUM-008", module="canonical.solution", message="resonance", denominator=1e-12
        )

        assert error.context["denominator"] == 1e-12

    def test_ambiguous_branch_error(self):
        """Test the searched window is recorded."""
        error = AmbiguousBranchError(
            error_code="NUM-009", module="phaseshift.branch", message="no clear radius", window=(30.0, 40.8)
        )

        assert error.context["window"] == (30.0, 40.8)

    @pytest.mark.parametrize(
        "cls",
        [
            DomainError,
            OverflowGuardError,
            StepSizeError,
            SingularityError,
            ConvergenceError,
            SingularMatrixError,
            NoPlateauError,
            ResonanceDenominatorError,
            AmbiguousBranchError,
        ],
    )
    def test_hierarchy(self, cls):
        """Test every numerical error derives from NumericalError."""
        assert issubclass(cls, NumericalError)
        assert issubclass(cls, CFWaveError)


class TestConfigErrors:
    """Tests for configuration exceptions."""

    def test_config_error(self):
        """Test the config file is recorded."""
        error = ConfigError(
            error_code="CFG-001", module="config.manager", message="not found", config_file="missing.toml"
        )

        assert error.context["config_file"] == "missing.toml"
        assert isinstance(error, CFWaveError)

    def test_schema_error(self):
        """Test schema fields are recorded."""
        error = SchemaError(
            error_code="CFG-004",
            module="config.manager",
            message="validation failed",
            schema_field="numerics.h",
            expected_type="float",
        )

        assert isinstance(error, ConfigError)
        assert error.context["schema_field"] == "numerics.h"
        assert error.context["expected_type"] == "float"
