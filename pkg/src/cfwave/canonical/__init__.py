"""
Canonical Function method for the coupled (F, G) system with exact exchange.

Quick Start:
    ```python
    from cfwave.canonical import solve_kftee
    from cfwave.potentials import ChannelSpec

    out = solve_kftee(ChannelSpec(k=0.2, l=0, S=0))
    out.result.delta  # ~2.034
    ```
"""

from .basis import CanonicalBasis, build_basis
from .limits import OriginLimits, origin_limits
from .solution import (
    RELIABILITY_LIMIT,
    AsymptoticRatio,
    PhysicalSolution,
    RegularPair,
    assemble_f1,
    asymptotic_ratio,
    exchange_constant,
    growth_amplitude,
    orbital_overlap,
    regular_pair,
    relative_spread,
)
from .solver import physical_solution, solve_kftee

__all__ = [
    # Basis
    "CanonicalBasis",
    "build_basis",
    # Origin limits
    "OriginLimits",
    "origin_limits",
    # Physical solution
    "RegularPair",
    "regular_pair",
    "exchange_constant",
    "AsymptoticRatio",
    "asymptotic_ratio",
    "growth_amplitude",
    "orbital_overlap",
    "relative_spread",
    "PhysicalSolution",
    "assemble_f1",
    "RELIABILITY_LIMIT",
    # Solver
    "physical_solution",
    "solve_kftee",
]
