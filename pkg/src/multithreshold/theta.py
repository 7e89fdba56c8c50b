"""Closed-form threshold numbers for the four graph families.

Each family has a staircase of boundary values of n at which the threshold
number steps up.  The boundary sequences count how many cliques or parts a
fixed number of edge or nonedge colors can support, plus one or two extra
cliques that a shortened threshold list still accommodates.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

BOUNDARY = "boundary"
INTERIOR = "interior"


def max_parts_bound(m: int, clique_size: int) -> int:
    """Most triangles (or K4s) that m colors can support without repeats.

    Size 3: m monochromatic triples plus one per 3-subset of colors.
    Size 4: m monochromatic quads plus rainbow quads whose triangles stay
    inside one half of the color range.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    if clique_size == 3:
        return m + comb(m, 3)
    if clique_size == 4:
        return m + comb(m // 2, 3) + comb((m + 1) // 2, 3)
    raise ValueError("clique_size must be 3 or 4")


def boundary_nk3(m: int) -> int:
    """Smallest n whose disjoint-triangle graph needs 2m+1 thresholds."""
    return max_parts_bound(m, 3) + 1


def boundary_knx3(m: int) -> int:
    """Smallest n whose 3-partite graph needs 2m+2 thresholds."""
    return max_parts_bound(m, 3) + 2


def boundary_nk4(m: int) -> int:
    """Smallest n whose disjoint-K4 graph needs 2m+1 thresholds."""
    return max_parts_bound(m, 4) + 1


def boundary_knx4(m: int) -> int:
    """Smallest n whose 4-partite graph needs 2m+2 thresholds."""
    return max_parts_bound(m, 4) + 2


@dataclass(frozen=True)
class ThetaResult:
    theta: int
    regime: str  # BOUNDARY when n sits exactly on a staircase step
    m: int


def _locate(seq, n: int) -> tuple[int, bool]:
    """Unique m >= 1 with seq(m-1) <= n < seq(m); flags n == seq(m-1)."""
    m = 1
    while not (seq(m - 1) <= n < seq(m)):
        m += 1
    return m, n == seq(m - 1)


def theta_nk3(n: int) -> ThetaResult:
    """Threshold number of n disjoint triangles."""
    if n < 1:
        raise ValueError("n must be at least 1")
    m, on_boundary = _locate(boundary_nk3, n)
    if on_boundary:
        return ThetaResult(2 * m - 1, BOUNDARY, m)
    return ThetaResult(2 * m, INTERIOR, m)


def theta_knx3(n: int) -> ThetaResult:
    """Threshold number of the complete n-partite graph with parts of 3."""
    if n < 2:
        raise ValueError("n must be at least 2")
    m, on_boundary = _locate(boundary_knx3, n)
    if on_boundary:
        return ThetaResult(2 * m, BOUNDARY, m)
    return ThetaResult(2 * m + 1, INTERIOR, m)


def theta_nk4(n: int) -> ThetaResult:
    """Threshold number of n disjoint K4s."""
    if n < 1:
        raise ValueError("n must be at least 1")
    m, on_boundary = _locate(boundary_nk4, n)
    if on_boundary:
        return ThetaResult(2 * m - 1, BOUNDARY, m)
    return ThetaResult(2 * m, INTERIOR, m)


def theta_knx4(n: int) -> ThetaResult:
    """Threshold number of the complete n-partite graph with parts of 4."""
    if n < 2:
        raise ValueError("n must be at least 2")
    m, on_boundary = _locate(boundary_knx4, n)
    if on_boundary:
        return ThetaResult(2 * m, BOUNDARY, m)
    return ThetaResult(2 * m + 1, INTERIOR, m)


THETA_BY_FAMILY = {
    "nk3": theta_nk3,
    "knx3": theta_knx3,
    "nk4": theta_nk4,
    "knx4": theta_knx4,
}
