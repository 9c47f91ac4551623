"""
Normalization of the continuum function to sqrt(2/pi) asymptotic amplitude.
"""

import math
from dataclasses import replace

import numpy as np
from numpy.typing import ArrayLike

from cfwave.potentials import ChannelSpec
from cfwave.special import riccati

from .extraction import PhaseWindow
from .models import NORMALIZATION, ContinuumWave


def normalization_factor(
    f1: ArrayLike,
    channel: ChannelSpec,
    window: PhaseWindow,
    branch_n: int,
) -> float:
    """
    Factor that maps f1 onto sqrt(2/pi) [s cos(delta) + c sin(delta)].

    The amplitude is the least-squares fit of the trailing ``len(window.r)``
    samples of ``f1`` against the free wave at each sample's local phase,
    shifted by ``branch_n`` pi (which fixes the overall sign).
    """
    f = np.asarray(f1, dtype=float)[-window.r.size :]
    pair = riccati(channel.l, channel.k * window.r)
    delta = window.local + branch_n * math.pi
    free = pair.s * np.cos(delta) + pair.c * np.sin(delta)
    amplitude = float(np.dot(f, free) / np.dot(free, free))
    return NORMALIZATION / amplitude


def normalize(
    wave: ContinuumWave,
    channel: ChannelSpec,
    window: PhaseWindow,
    branch_n: int,
) -> tuple[ContinuumWave, float]:
    """
    Rescale every component of a raw continuum function.

    Returns:
        (normalized wave, factor applied)

    Example:
        ```python
        normalized, factor = normalize(raw, channel, window, branch.branch_n)
        ```
    """
    factor = normalization_factor(wave.f1, channel, window, branch_n)
    scaled = replace(
        wave,
        f1=wave.f1 * factor,
        f1_prime=wave.f1_prime * factor,
        f2=wave.f2 * factor,
        f2_prime=wave.f2_prime * factor,
    )
    return scaled, factor
