"""Initial two-qubit families and their view from a uniformly accelerated observer.

Basis conventions, fixed globally:
  * two-qubit index = 2*(Alice bit) + (Rob/region-I bit), i.e. |00>,|01>,|10>,|11>
  * three-mode index = 4*(Alice) + 2*(region I) + (region II)

The acceleration enters only through the parameter r with
cos r = (exp(-2*pi*omega*c/a) + 1)**(-1/2); for fermionic modes
r is confined to [0, pi/4].  Natural units (c=1) are the default
in acceleration_to_r; the paper-facing API works directly in r.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .matcore import check_density_matrix, partial_trace_last

R_MAX = np.pi / 4


class Family(str, enum.Enum):
    THETA1 = "theta1"
    THETA2 = "theta2"


@dataclass(frozen=True)
class StateSpec:
    """Initial-family selector plus state parameter alpha in (-1,1)\\{0}.

    alpha in {0, -1, 1} gives an unentangled product state; such values are
    rejected unless allow_degenerate is set, so boundary exploration stays
    an explicit opt-in.
    """

    family: Family
    alpha: float
    allow_degenerate: bool = False

    def __post_init__(self):
        a = self.alpha
        if not np.isfinite(a) or abs(a) > 1.0:
            raise ValueError(f"alpha must lie in [-1, 1], got {a!r}")
        if not self.allow_degenerate and (a == 0.0 or abs(a) == 1.0):
            raise ValueError(
                f"alpha={a!r} is degenerate (product state); pass allow_degenerate=True to permit"
            )


def validate_r(r: float) -> float:
    r = float(r)
    if not np.isfinite(r) or r < 0.0 or r > R_MAX + 1e-15:
        raise ValueError(f"acceleration parameter r must lie in [0, pi/4], got {r!r}")
    return min(r, R_MAX)


def acceleration_to_r(a: float, omega: float, c: float = 1.0) -> float:
    """Map (acceleration, mode frequency, speed of light) to the parameter r."""
    if a <= 0 or omega <= 0 or c <= 0:
        raise ValueError("acceleration_to_r requires a > 0, omega > 0, c > 0")
    return float(np.arccos((np.exp(-2.0 * np.pi * omega * c / a) + 1.0) ** -0.5))


def build_initial(spec: StateSpec) -> np.ndarray:
    """Length-4 amplitude vector of the chosen initial family."""
    head = np.sqrt(1.0 - spec.alpha ** 2)
    if spec.family is Family.THETA1:
        return np.array([head, 0.0, 0.0, spec.alpha], dtype=complex)
    return np.array([0.0, head, spec.alpha, 0.0], dtype=complex)


def rindler_expand(spec: StateSpec, r: float) -> np.ndarray:
    """Expand Rob's Minkowski mode into Rindler regions I/II.

    Substitutes |0>_M -> cos r |0>_I|0>_II + sin r |1>_I|1>_II and
    |1>_M -> |1>_I|0>_II on Rob's qubit only, returning the length-8
    amplitude vector over |Alice, I, II>.
    """
    r = validate_r(r)
    two = build_initial(spec)
    cr, sr = np.cos(r), np.sin(r)
    out = np.zeros(8, dtype=complex)
    for idx in range(4):
        amp = two[idx]
        if amp == 0:
            continue
        a_bit, rob = divmod(idx, 2)
        if rob == 0:
            out[4 * a_bit + 0] += amp * cr   # |a,0,0>
            out[4 * a_bit + 3] += amp * sr   # |a,1,1>
        else:
            out[4 * a_bit + 2] += amp        # |a,1,0>
    return out


def reduced_state(spec: StateSpec, r: float) -> np.ndarray:
    """Alice-Rob density matrix after tracing out the inaccessible region II."""
    ket = rindler_expand(spec, r)
    rho = partial_trace_last(np.outer(ket, ket.conj()))
    return check_density_matrix(rho)


def reduced_state_analytic(spec: StateSpec, r: float) -> np.ndarray:
    """Hard-coded closed forms of the reduced matrices; oracle partner of reduced_state."""
    r = validate_r(r)
    a = spec.alpha
    g = 1.0 - a * a
    cr, sr = np.cos(r), np.sin(r)
    rho = np.zeros((4, 4), dtype=complex)
    if spec.family is Family.THETA1:
        rho[0, 0] = g * cr * cr
        rho[1, 1] = g * sr * sr
        rho[3, 3] = a * a
        rho[0, 3] = rho[3, 0] = a * np.sqrt(g) * cr
    else:
        rho[1, 1] = g
        rho[2, 2] = a * a * cr * cr
        rho[3, 3] = a * a * sr * sr
        rho[1, 2] = rho[2, 1] = a * np.sqrt(g) * cr
    return rho
