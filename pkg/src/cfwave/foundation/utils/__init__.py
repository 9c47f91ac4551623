"""
cfwave utility functions.

Quick Start:
    ```python
    from cfwave.foundation.utils import parse_k_range, parse_int_spec, parse_spin

    ks = parse_k_range("0.1:1.5:0.1")
    ls = parse_int_spec("0:5")
    spins = parse_spin("both")
    ```
"""

from .validation_utils import parse_int_spec, parse_k_range, parse_spin, validate_wavenumber

__all__ = [
    "parse_k_range",
    "parse_int_spec",
    "parse_spin",
    "validate_wavenumber",
]
