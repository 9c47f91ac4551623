"""
Special functions for the asymptotic boundary condition.

Quick Start:
    ```python
    from cfwave.special import riccati

    pair = riccati(2, 3.5)
    assert abs(pair.wronskian + 1.0) < 1e-12
    ```
"""

from .riccati import RiccatiPair, riccati, riccati_sequence

__all__ = ["RiccatiPair", "riccati", "riccati_sequence"]
