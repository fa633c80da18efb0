"""Local amplitude-damping channel and its closed-form action on both families.

The channel acts independently on Alice's and Rob's qubits with the
standard Kraus pair for decay probability P; the Markov time model
P = 1 - exp(-Gamma*t) lives in NoiseSpec, so everything downstream sees
a plain probability.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matcore import check_density_matrix, tensor
from .states import Family, StateSpec, validate_r

KRAUS_COMPLETENESS_TOL = 1e-12


def _check_p(p: float, name: str = "p") -> float:
    p = float(p)
    if not np.isfinite(p) or p < 0.0 or p > 1.0:
        raise ValueError(f"{name} must lie in [0, 1], got {p!r}")
    return p


@dataclass(frozen=True)
class NoiseSpec:
    """Decay probability, either given directly or via (gamma, t)."""

    p: float

    def __post_init__(self):
        _check_p(self.p)

    @classmethod
    def from_rate_time(cls, gamma: float, t: float) -> "NoiseSpec":
        if gamma < 0 or t < 0:
            raise ValueError("gamma and t must be non-negative")
        return cls(p=1.0 - np.exp(-gamma * t))

    def time_for(self, gamma: float) -> float:
        """Invert the Markov model: time at which this decay level is reached."""
        if gamma <= 0:
            raise ValueError("gamma must be positive")
        return -np.log1p(-self.p) / gamma


@dataclass(frozen=True)
class KrausPair:
    m0: np.ndarray
    m1: np.ndarray

    def __post_init__(self):
        comp = self.m0.conj().T @ self.m0 + self.m1.conj().T @ self.m1
        if np.max(np.abs(comp - np.eye(2))) > KRAUS_COMPLETENESS_TOL:
            raise ValueError("Kraus pair violates completeness")


def kraus_amplitude_damping(p: float) -> KrausPair:
    """Kraus operators of single-qubit amplitude damping with decay probability p."""
    p = _check_p(p)
    m0 = np.array([[1.0, 0.0], [0.0, np.sqrt(1.0 - p)]], dtype=complex)
    m1 = np.array([[0.0, np.sqrt(p)], [0.0, 0.0]], dtype=complex)
    return KrausPair(m0, m1)


def apply_local_channel(rho, p_a: float, p_r: float | None = None) -> np.ndarray:
    """Apply amplitude damping independently to both qubits.

    p_r defaults to p_a, matching the equal-decay scenario; distinct values
    are supported for property testing (e.g. the composition semigroup law).
    """
    rho = check_density_matrix(rho)
    p_a = _check_p(p_a, "p_a")
    p_r = p_a if p_r is None else _check_p(p_r, "p_r")
    ka = kraus_amplitude_damping(p_a)
    kr = kraus_amplitude_damping(p_r)
    out = np.zeros((4, 4), dtype=complex)
    for ma in (ka.m0, ka.m1):
        for mr in (kr.m0, kr.m1):
            k = tensor(ma, mr)
            out += k @ rho @ k.conj().T
    return check_density_matrix(out)


def evolved_closed_form(spec: StateSpec, r: float, p: float) -> np.ndarray:
    """Evolved density matrix of either family, built directly from its closed form.

    Serves as the oracle partner of the Kraus pipeline
    apply_local_channel(reduced_state(spec, r), p, p).
    """
    r = validate_r(r)
    p = _check_p(p)
    a = spec.alpha
    b = 1.0 - p
    g = 1.0 - a * a
    cr, sr = np.cos(r), np.sin(r)
    c2, s2 = cr * cr, sr * sr
    coh = a * b * np.sqrt(g) * cr
    rho = np.zeros((4, 4), dtype=complex)
    if spec.family is Family.THETA1:
        rho[0, 0] = p * p * a * a + g * (c2 + p * s2)
        rho[1, 1] = b * (p * a * a + g * s2)
        rho[2, 2] = p * b * a * a
        rho[3, 3] = b * b * a * a
        rho[0, 3] = rho[3, 0] = coh
    else:
        rho[0, 0] = p * g + p * a * a * (c2 + p * s2)
        rho[1, 1] = b * (g + p * a * a * s2)
        rho[2, 2] = b * a * a * (c2 + p * s2)
        rho[3, 3] = b * b * a * a * s2
        rho[1, 2] = rho[2, 1] = coh
    return rho
