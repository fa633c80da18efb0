"""Zero-concurrence boundaries and sudden-death parameter ranges.

The boundary curves are the loci where the pre-clamp concurrence bracket
vanishes; the death ranges are their P -> 1 limits.  find_death_point is
the numeric cross-check: a coarse scan plus bisection on the raw bracket.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .entanglement import concurrence_closed
from .states import Family, validate_r

SCAN_STEP = 1e-3
BISECT_TOL = 1e-12


class NoBoundaryError(ValueError):
    """The zero-concurrence boundary has no root inside (0, 1) for these inputs."""


@dataclass(frozen=True)
class DeathPoint:
    """Smallest decay probability at which the concurrence reaches zero."""

    p_star: float
    exists_before_full_decay: bool


@dataclass(frozen=True)
class DeathRange:
    """Open alpha-interval (alpha_min, 1) where sudden death can occur."""

    family: Family
    r: float
    alpha_min: float
    alpha_max: float = 1.0


def boundary_alpha_theta1(r: float, p: float) -> float:
    """|alpha| on the zero-concurrence boundary of the first family."""
    r = validate_r(r)
    if not 0.0 < p <= 1.0:
        raise ValueError(f"p must lie in (0, 1], got {p!r}")
    c2 = np.cos(2.0 * r)
    num = 1.0 - p + c2 + p * c2
    den = num + 2.0 * p * p
    assert den > 0.0
    return float(np.sqrt(num / den))


def boundary_alpha_theta2(r: float, p: float) -> float:
    """|alpha| on the zero-concurrence boundary of the second family.

    At r = 0 the concurrence stays positive for every alpha < 1, so there
    is no boundary inside the open interval; that case raises.
    """
    r = validate_r(r)
    if not 0.0 < p <= 1.0:
        raise ValueError(f"p must lie in (0, 1], got {p!r}")
    if r == 0.0:
        raise NoBoundaryError("no zero-concurrence boundary at r=0 for the second family")
    c2 = np.cos(2.0 * r)
    c4 = np.cos(4.0 * r)
    num = 1.0 - p + c2 + p * c2
    den = (4.0 - 3.0 * p + 3.0 * p * p
           + 4.0 * (1.0 + p - p * p) * c2 + (p - 1.0) * p * c4)
    assert den > 0.0
    return float(2.0 * np.sqrt(num / den))


def death_range(family: Family, r: float) -> DeathRange:
    """Alpha-range where sudden death occurs before full decay (P -> 1 boundary)."""
    r = validate_r(r)
    c2 = np.cos(2.0 * r)
    if family is Family.THETA1:
        alpha_min = np.sqrt(c2) / np.sqrt(1.0 + c2)
    else:
        alpha_min = np.sqrt(c2) / np.cos(r)
    return DeathRange(family=family, r=r, alpha_min=float(alpha_min))


def find_death_point(family: Family, alpha: float, r: float) -> DeathPoint:
    """First P at which the closed-form bracket reaches zero, by scan + bisection."""
    r = validate_r(r)

    def raw(p: float) -> float:
        return concurrence_closed(family, alpha, r, p).raw

    n = int(round(1.0 / SCAN_STEP))
    prev_p, prev_raw = 0.0, raw(0.0)
    for k in range(1, n + 1):
        p = k * SCAN_STEP
        cur = raw(min(p, 1.0))
        if cur < 0.0:
            lo, hi = prev_p, min(p, 1.0)
            for _ in range(200):
                mid = 0.5 * (lo + hi)
                val = raw(mid)
                if abs(val) <= BISECT_TOL:
                    return DeathPoint(p_star=mid, exists_before_full_decay=True)
                if val > 0.0:
                    lo = mid
                else:
                    hi = mid
            return DeathPoint(p_star=0.5 * (lo + hi), exists_before_full_decay=True)
        prev_p, prev_raw = min(p, 1.0), cur
    return DeathPoint(p_star=1.0, exists_before_full_decay=False)


def compare_death_ranges(r: float) -> tuple[float, float]:
    """Endpoints (alpha_min for each family); the first range contains the second."""
    a1 = death_range(Family.THETA1, r).alpha_min
    a2 = death_range(Family.THETA2, r).alpha_min
    if a1 > a2 + 1e-12:
        raise AssertionError(f"death-range containment violated at r={r}: {a1} > {a2}")
    return a1, a2
