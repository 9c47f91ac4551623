"""
Branch of the phase shift from node counting.

Up to a matching radius R, f1 has floor((theta_R + delta)/pi) interior
nodes and s_l(kr) has floor(theta_R/pi), theta_R being the free phase
atan2(s_l, c_l) continued from the origin. With theta_R = m pi + theta_frac
and delta = delta_loc + n pi,

    n = (N_f - N_s) - floor((theta_frac + delta_loc) / pi).
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.typing import ArrayLike, NDArray

from cfwave.foundation.exceptions import AmbiguousBranchError
from cfwave.foundation.logging import get_logger
from cfwave.potentials import ChannelSpec
from cfwave.special import riccati

from .extraction import PhaseWindow

logger = get_logger(__name__)

NODE_CLEARANCE = 1e-3
"""Minimum |f| relative to the local envelope at an admissible matching radius"""


@dataclass(frozen=True)
class Branch:
    """Branch-resolved phase."""

    delta: float
    branch_n: int
    r_match: float
    nodes_f: int
    nodes_free: int


def count_nodes(values: NDArray[np.float64]) -> int:
    """Sign changes of a sampled function (exact zeros are skipped)."""
    signs = np.sign(values)
    signs = signs[signs != 0]
    return int(np.count_nonzero(signs[1:] != signs[:-1]))


def _clear_of_node(value: NDArray[np.float64], slope: NDArray[np.float64], k: float) -> NDArray[np.bool_]:
    envelope = np.sqrt(value * value + (slope / k) ** 2)
    return np.abs(value) >= NODE_CLEARANCE * envelope


def resolve_branch(
    r: ArrayLike,
    f1: ArrayLike,
    f1_prime: ArrayLike,
    channel: ChannelSpec,
    window: PhaseWindow,
    reliable: ArrayLike | None = None,
) -> Branch:
    """
    Absolute phase shift from the principal value and node counts.

    Args:
        r: Ascending radii from near the origin to the end of the mesh
        f1, f1_prime: Radial function and derivative on ``r``
        channel: Scattering channel
        window: Phase window from ``extract_phase``
        reliable: Samples to use for counting (all when None)

    Returns:
        Branch with delta = principal + n pi

    Raises:
        AmbiguousBranchError: If every window radius sits on a node of f1 or s_l
    """
    r = np.asarray(r, dtype=float)
    f = np.asarray(f1, dtype=float)
    fp = np.asarray(f1_prime, dtype=float)
    keep = np.ones_like(r, dtype=bool) if reliable is None else np.asarray(reliable, dtype=bool)
    k, l = channel.k, channel.l

    first = int(np.searchsorted(r, window.r[0] - 1e-12))
    candidates = np.arange(first, r.size)
    free = riccati(l, k * r[candidates])
    admissible = _clear_of_node(f[candidates], fp[candidates], k) & _clear_of_node(
        free.s, k * free.s_prime, k
    )
    if not np.any(admissible):
        raise AmbiguousBranchError(
            error_code="NUM-009",
            module="phaseshift.branch",
            message=f"No matching radius clear of nodes for {channel.label}",
            channel=channel.label,
            window=(float(window.r[0]), float(window.r[-1])),
        )
    match = int(candidates[np.flatnonzero(admissible)[-1]])
    R = float(r[match])

    upto = keep & (r <= R)
    nodes_f = count_nodes(f[upto])
    nodes_free = count_nodes(np.asarray(riccati(l, k * r[upto]).s))

    pair = riccati(l, k * R)
    theta_frac = math.atan2(pair.s, pair.c) % math.pi
    delta_loc = float(window.local[int(np.argmin(np.abs(window.r - R)))])
    n = (nodes_f - nodes_free) - math.floor((theta_frac + delta_loc) / math.pi)
    estimate = delta_loc + n * math.pi

    principal = window.principal
    shift = round((estimate - principal) / math.pi)
    delta = principal + shift * math.pi
    logger.debug(
        "branch resolved",
        extra={"channel": channel.label, "n": shift, "nodes_f": nodes_f, "nodes_free": nodes_free, "r_match": R},
    )
    return Branch(delta=delta, branch_n=int(shift), r_match=R, nodes_f=nodes_f, nodes_free=nodes_free)
