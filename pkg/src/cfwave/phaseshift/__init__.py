"""
Phase-shift extraction: Q function, tail correction, branch and normalization.

Quick Start:
    ```python
    from cfwave.phaseshift import extract_phase, resolve_branch

    window = extract_phase(r, f1, f1_prime, channel, numerics)
    branch = resolve_branch(r, f1, f1_prime, channel, window)
    branch.delta
    ```
"""

from .branch import Branch, count_nodes, resolve_branch
from .extraction import (
    PhaseWindow,
    circular_mean,
    extract_phase,
    local_phase,
    phase_spread,
    q_function,
    wrap_phase,
)
from .models import NORMALIZATION, ContinuumWave, PhaseShiftResult, SolverOutput
from .normalization import normalization_factor, normalize
from .pipeline import finish_channel, solve_with_extension
from .tail import far_radius, tail_phase, tail_phases

__all__ = [
    # Models
    "PhaseShiftResult",
    "ContinuumWave",
    "SolverOutput",
    "NORMALIZATION",
    # Q function
    "q_function",
    "local_phase",
    "extract_phase",
    "PhaseWindow",
    "wrap_phase",
    "circular_mean",
    "phase_spread",
    # Tail
    "tail_phase",
    "tail_phases",
    "far_radius",
    # Branch
    "resolve_branch",
    "Branch",
    "count_nodes",
    # Normalization
    "normalize",
    "normalization_factor",
    # Pipeline
    "finish_channel",
    "solve_with_extension",
]
