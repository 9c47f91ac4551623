"""
Validation and parsing helpers for channel selections.

These functions turn the compact text forms accepted on the command line
and in configuration files (``0.1:1.5:0.1``, ``0:5``, ``both``) into
validated Python values.
"""

import math
from collections.abc import Iterable

import numpy as np


def parse_k_range(spec: str) -> list[float]:
    """
    Expand a ``start:stop:step`` wavenumber range (stop inclusive).

    Values are rounded to 12 decimals so that ``0.1:0.3:0.1`` yields
    exactly ``[0.1, 0.2, 0.3]``.

    Args:
        spec: Range text, e.g. "0.1:1.5:0.1"

    Returns:
        List of wavenumbers in increasing order

    Raises:
        ValueError: If the text is malformed, the step is not positive,
            or any value is not positive

    Example:
        ```python
        parse_k_range("0.1:0.5:0.1")  # [0.1, 0.2, 0.3, 0.4, 0.5]
        ```
    """
    parts = spec.split(":")
    if len(parts) != 3:
        raise ValueError(f"k range must be start:stop:step, got {spec!r}")
    try:
        start, stop, step = (float(p) for p in parts)
    except ValueError as e:
        raise ValueError(f"k range contains a non-numeric part: {spec!r}") from e

    if step <= 0:
        raise ValueError(f"k range step must be positive: {spec!r}")
    if stop < start:
        raise ValueError(f"k range stop is below start: {spec!r}")

    count = int(math.floor((stop - start) / step + 1e-9)) + 1
    values = np.round(start + step * np.arange(count), 12)
    return [validate_wavenumber(float(v)) for v in values]


def parse_int_spec(spec: str | int | Iterable[int], name: str = "l") -> list[int]:
    """
    Parse an integer selection: "3", "0,2,4", "0:5" (inclusive) or a list.

    Args:
        spec: Selection text, a single int or an iterable of ints
        name: Name used in error messages

    Returns:
        Sorted list of distinct non-negative integers

    Raises:
        ValueError: If the selection is malformed or contains negatives
    """
    if isinstance(spec, int):
        values = [spec]
    elif isinstance(spec, str):
        text = spec.strip()
        if not text:
            raise ValueError(f"{name} selection is empty")
        values = []
        for chunk in text.split(","):
            if ":" in chunk:
                lo, _, hi = chunk.partition(":")
                try:
                    values.extend(range(int(lo), int(hi) + 1))
                except ValueError as e:
                    raise ValueError(f"invalid {name} range: {chunk!r}") from e
            else:
                try:
                    values.append(int(chunk))
                except ValueError as e:
                    raise ValueError(f"invalid {name} value: {chunk!r}") from e
    else:
        values = [int(v) for v in spec]

    if any(v < 0 for v in values):
        raise ValueError(f"{name} values must be non-negative: {values}")
    return sorted(set(values))


def parse_spin(spec: str | int | Iterable[int]) -> list[int]:
    """
    Parse a total-spin selection.

    Args:
        spec: "0", "1", "both" or an iterable of 0/1

    Returns:
        Sorted list drawn from [0, 1]

    Raises:
        ValueError: For any other value
    """
    if isinstance(spec, str):
        text = spec.strip().lower()
        if text == "both":
            return [0, 1]
        values = parse_int_spec(text, name="spin")
    else:
        values = parse_int_spec(spec, name="spin")

    if not set(values) <= {0, 1}:
        raise ValueError(f"spin must be 0, 1 or both, got {spec!r}")
    return values


def validate_wavenumber(k: float) -> float:
    """
    Validate a wavenumber in atomic units.

    Raises:
        ValueError: If ``k`` is not a finite positive number
    """
    if not math.isfinite(k) or k <= 0:
        raise ValueError(f"wavenumber must be finite and positive, got {k}")
    return float(k)
