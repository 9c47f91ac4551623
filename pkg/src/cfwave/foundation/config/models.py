"""
Pydantic configuration models for cfwave.

``NumericsConfig`` is the frozen bundle of numerical settings a solver
consumes; ``RunConfig`` is the flat, user-facing run description read from
TOML files and command-line flags. Defaults reproduce the published mesh:
base step 0.006 a.u., region boundaries 1.2 / 4.8 / 40.8 / 184.8 a.u.,
start radius r0 = 1.0 a.u.
"""

from enum import Enum
from pathlib import Path
from typing import Annotated, Any

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from cfwave.foundation.utils import parse_int_spec, parse_k_range, parse_spin


# ============================================================================
# Enumerations
# ============================================================================


class SolverId(str, Enum):
    """Available phase-shift solvers."""

    KFTEE = "kftee"
    """Canonical functions with exact non-local exchange"""

    MCDMM = "mcdmm"
    """Coupled Numerov baseline launched from the origin"""

    FMCC = "fmcc"
    """Numerov with the Furness-McCarthy local exchange potential"""

    BN = "bn"
    """Numerov with the Bransden-Noble local exchange potential"""


class OriginMode(str, Enum):
    """How the canonical origin limit is imposed at each epsilon."""

    VALUE = "value"
    """Lambda = -beta^-1 alpha (vanishing value)"""

    REGULAR = "regular"
    """Matched to the regular log-derivative (l+1)/eps + a_F"""


class RatioMode(str, Enum):
    """How the asymptotic ratio D = G(r0) / F(r0) is fixed."""

    VALUE = "value"
    """G vanishes at the ratio radius"""

    GROWTH = "growth"
    """G carries no r^{l+1} growth at the mesh end"""


class OutputFormat(str, Enum):
    """Result file formats."""

    CSV = "csv"
    JSON = "json"


# ============================================================================
# Numerical settings
# ============================================================================


class _NumericFields(BaseModel):
    """Numerical settings shared by NumericsConfig and RunConfig (everything but h)."""

    boundaries: tuple[float, ...] = (1.2, 4.8, 40.8, 184.8)
    """Region boundaries (a.u.); the step doubles after each one"""

    r_max: Annotated[float, Field(gt=0)] = 40.8
    """Outer radius of the integration grid"""

    extend_to: Annotated[float, Field(gt=0)] = 184.8
    """Outer radius used when the grid is extended after a failed plateau"""

    auto_extend: bool = True
    """Retry on the extended grid when D(r) or Q(r) does not settle"""

    r0: Annotated[float, Field(gt=0)] = 1.0
    """Canonical start radius (snapped to the nearest grid point)"""

    r_min: Annotated[float, Field(gt=0)] = 1e-4
    """Inner cutoff of the inward canonical integration"""

    epsilons: tuple[float, ...] = (1e-2, 5e-3, 2e-3, 1e-3, 5e-4, 2e-4, 1e-4)
    """Decreasing radii at which the origin limit is estimated"""

    origin_mode: OriginMode = OriginMode.REGULAR
    """Origin condition used for Lambda and lambda"""

    origin_tol: Annotated[float, Field(gt=0)] = 1e-6
    """Relative max-norm change accepted between the last two epsilons"""

    plateau_window: Annotated[int, Field(ge=3)] = 50
    """Trailing grid points over which D(r) and Q(r) must settle"""

    plateau_tol: Annotated[float, Field(gt=0)] = 1e-8
    """Spread tolerance for the plateau windows"""

    ratio_mode: RatioMode = RatioMode.VALUE
    """Condition that fixes D for the s-wave overlap function"""

    ratio_radius: Annotated[float, Field(gt=0)] = 184.8
    """Radius at which G vanishes in value mode; the canonical mesh reaches it"""

    ratio_tol: Annotated[float, Field(gt=0)] = 1e-2
    """Spread (rad) of arctan D(r) accepted over the plateau window in value mode"""

    matching_window: Annotated[int, Field(ge=3)] = 100
    """Trailing grid points used for branch matching and normalization"""

    rtol: Annotated[float, Field(gt=0, lt=1)] = 1e-11
    """Relative tolerance of the adaptive integrator"""

    atol: Annotated[float, Field(gt=0)] = 1e-14
    """Absolute tolerance of the adaptive integrator"""

    r_cut: Annotated[float, Field(gt=0)] = 40.8
    """Upper limit of the exchange-constant overlap integrals"""

    resonance_guard: Annotated[float, Field(gt=0)] = 1e-10
    """Smallest accepted |1 - kappa J|"""

    tail_correction: bool = True
    """Add the phase accumulated by the polarization tail beyond the window"""

    instability_tol: Annotated[float, Field(gt=0)] = 1e-4
    """Two-point phase spread above which a Numerov baseline is flagged unstable"""

    exchange: bool = True
    """Include exchange (non-local for kftee/mcdmm, local for fmcc/bn)"""

    static: bool = True
    """Include the static potential of the 1s target"""

    polarization: bool = True
    """Include the polarization potential"""

    @field_validator("boundaries", "epsilons", mode="before")
    @classmethod
    def _listify(cls, v: Any) -> Any:
        if isinstance(v, list):
            return tuple(v)
        return v

    @model_validator(mode="after")
    def validate_numeric_layout(self) -> "_NumericFields":
        """Cross-check the mesh, start radius and origin sequence."""
        b = self.boundaries
        if not b or any(x <= 0 for x in b) or any(b2 <= b1 for b1, b2 in zip(b, b[1:])):
            raise ValueError(f"boundaries must be positive and strictly increasing: {b}")
        if self.r_max > b[-1] + 1e-9:
            raise ValueError(f"r_max ({self.r_max}) exceeds the last boundary ({b[-1]})")
        if self.extend_to < self.r_max:
            raise ValueError(f"extend_to ({self.extend_to}) is below r_max ({self.r_max})")
        if self.extend_to > b[-1] + 1e-9:
            raise ValueError(f"extend_to ({self.extend_to}) exceeds the last boundary ({b[-1]})")
        if self.ratio_radius > b[-1] + 1e-9:
            raise ValueError(f"ratio_radius ({self.ratio_radius}) exceeds the last boundary ({b[-1]})")
        if not self.r_min < self.r0 < self.r_max:
            raise ValueError(f"r0 ({self.r0}) must lie between r_min and r_max")

        eps = self.epsilons
        if len(eps) < 2 or any(e2 >= e1 for e1, e2 in zip(eps, eps[1:])):
            raise ValueError("epsilons must hold at least two strictly decreasing radii")
        if eps[-1] < self.r_min * (1 - 1e-12) or eps[0] >= self.r0:
            raise ValueError("epsilons must lie in [r_min, r0)")
        if self.plateau_window > self.matching_window:
            raise ValueError("plateau_window must not exceed matching_window")
        return self


class NumericsConfig(_NumericFields):
    """
    Frozen numerical settings for one solver run.

    Example:
        ```python
        from cfwave.foundation.config import NumericsConfig

        numerics = NumericsConfig(h=0.004, r0=2.0)
        extended = numerics.model_copy(update={"r_max": numerics.extend_to})
        ```
    """

    h: Annotated[float, Field(gt=0, le=0.1)] = 0.006
    """Base step of the innermost region (a.u.)"""

    model_config = ConfigDict(frozen=True, extra="forbid")

    @property
    def extended(self) -> "NumericsConfig":
        """Same settings on the extended grid."""
        return self.model_copy(update={"r_max": self.extend_to})

    @property
    def ratio_mesh_radius(self) -> float:
        """Outer radius of the canonical mesh: at least the ratio radius in value mode."""
        if self.ratio_mode is RatioMode.VALUE:
            return max(self.r_max, self.ratio_radius)
        return self.r_max


# ============================================================================
# Run configuration
# ============================================================================


class RunConfig(_NumericFields):
    """
    Flat run configuration: channel selection, solvers, output and numerics.

    Every key can come from a TOML file and be overridden by a command-line
    flag. Unknown keys are rejected.

    Example:
        ```python
        config = RunConfig(k_range="0.1:1.5:0.1", l=[0], spin="both", solvers=["kftee"])
        for channel in config.channels():
            ...
        ```
    """

    k: list[Annotated[float, Field(gt=0)]] = Field(default_factory=list)
    """Explicit wavenumbers (a.u.), each positive"""

    k_range: str | None = None
    """Wavenumber range start:stop:step (stop inclusive), merged with ``k``"""

    l: list[int] = Field(default_factory=lambda: [0])
    """Partial waves: an int, a list, or text such as '0:5' or '0,2'"""

    spin: list[int] = Field(default_factory=lambda: [0, 1])
    """Total spins: 0, 1 or 'both'"""

    solvers: list[SolverId] = Field(default_factory=lambda: [SolverId.KFTEE])
    """Solvers to run for every channel"""

    h: list[Annotated[float, Field(gt=0, le=0.1)]] = Field(default_factory=lambda: [0.006])
    """Base steps; one result row per value"""

    format: OutputFormat = OutputFormat.CSV
    """Output format"""

    output: Path | None = None
    """Output path (stdout when unset)"""

    jobs: Annotated[int, Field(ge=1, le=256)] = 1
    """Worker processes for sweeps"""

    strict: bool = False
    """Exit with status 2 when any row did not converge"""

    deterministic: bool = False
    """Omit wall times so repeated runs produce identical files"""

    log_level: Annotated[str, Field(pattern="^(DEBUG|INFO|WARNING|ERROR|CRITICAL)$")] = "WARNING"
    """Console log level"""

    log_dir: Path | None = None
    """Directory for rotating text and JSON logs (disabled when unset)"""

    model_config = ConfigDict(validate_assignment=True, extra="forbid")

    @field_validator("l", mode="before")
    @classmethod
    def _parse_l(cls, v: Any) -> list[int]:
        return parse_int_spec(v, name="l")

    @field_validator("spin", mode="before")
    @classmethod
    def _parse_spin(cls, v: Any) -> list[int]:
        return parse_spin(v)

    @field_validator("k", "h", "solvers", mode="before")
    @classmethod
    def _scalar_to_list(cls, v: Any) -> Any:
        if isinstance(v, (int, float, str)):
            return [v]
        return v

    @field_validator("k_range")
    @classmethod
    def _check_k_range(cls, v: str | None) -> str | None:
        if v is not None:
            parse_k_range(v)
        return v

    @property
    def wavenumbers(self) -> list[float]:
        """Sorted union of ``k`` and the expanded ``k_range``."""
        values = set(self.k)
        if self.k_range:
            values.update(parse_k_range(self.k_range))
        return sorted(values)

    def channels(self) -> list[tuple[float, int, int]]:
        """(k, l, S) triples in deterministic (k, l, S) order."""
        return [(k, l, s) for k in self.wavenumbers for l in self.l for s in self.spin]

    def to_numerics(self, h: float | None = None) -> NumericsConfig:
        """
        Derive the frozen numerical settings for one base step.

        Args:
            h: Base step; defaults to the first configured value
        """
        fields = self.model_dump(include=set(_NumericFields.model_fields))
        return NumericsConfig(h=self.h[0] if h is None else h, **fields)

    def to_dict(self) -> dict[str, Any]:
        """JSON-compatible dump (enums as values, paths as strings)."""
        return self.model_dump(mode="json")
