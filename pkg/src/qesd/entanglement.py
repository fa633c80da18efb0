"""Wootters concurrence: eigenvalue definition, X-state fast path, closed forms.

Three routes to the same number, kept deliberately independent so they can
cross-check each other:

  * concurrence_eigen   -- spin-flip + Hermitian spectrum, works for any state
  * concurrence_xstate  -- analytic shortcut for X-shaped matrices
  * c_s1_closed / c_s2_closed -- the per-family closed forms in (alpha, r, P)
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .matcore import check_density_matrix, eig_hermitian, sqrt_psd, tensor
from .states import Family, validate_r

X_SHAPE_TOL = 1e-12

_SIGMA_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
_SPIN_FLIP = tensor(_SIGMA_Y, _SIGMA_Y)


class Method(str, enum.Enum):
    EIGEN = "eigen"
    XSTATE = "xstate"
    CLOSED = "closed"


@dataclass(frozen=True)
class ConcurrenceResult:
    """Clamped concurrence plus the pre-clamp bracket used for root finding."""

    value: float
    raw: float
    method: Method

    def __post_init__(self):
        if not (0.0 <= self.value <= 1.0 + 1e-10):
            raise ValueError(f"concurrence {self.value!r} outside [0, 1]")


def spin_flip(rho: np.ndarray) -> np.ndarray:
    """Time-reversed partner (sy x sy) rho* (sy x sy)."""
    return _SPIN_FLIP @ rho.conj() @ _SPIN_FLIP


def concurrence_eigen(rho) -> ConcurrenceResult:
    """Concurrence from the spectrum of the spin-flipped matrix.

    The square-rooted eigenvalues of rho*rho~ equal the singular values of
    B = sqrt(rho) (sy x sy) sqrt(rho)*, since B B+ = sqrt(rho) rho~ sqrt(rho).
    Computing them through the Hermitian embedding [[0, B], [B+, 0]] avoids
    taking square roots of near-zero eigenvalues, which would cost half the
    working precision; all spectral work stays in the Jacobi solver.
    """
    rho = check_density_matrix(rho)
    s = sqrt_psd(rho)
    b = s @ _SPIN_FLIP @ s.conj()
    emb = np.zeros((8, 8), dtype=complex)
    emb[:4, 4:] = b
    emb[4:, :4] = b.conj().T
    w, _ = eig_hermitian(emb)
    roots = w[:4]  # eigenvalues come in +/- sigma pairs; top half are the sigma_i
    raw = roots[0] - roots[1] - roots[2] - roots[3]
    return ConcurrenceResult(value=max(0.0, raw), raw=float(raw), method=Method.EIGEN)


def concurrence_xstate(rho) -> ConcurrenceResult:
    """Closed-form concurrence for matrices supported on diagonal + anti-diagonal."""
    rho = check_density_matrix(rho)
    mask = np.ones((4, 4), dtype=bool)
    mask[np.arange(4), np.arange(4)] = False
    mask[np.arange(4), 3 - np.arange(4)] = False
    if np.max(np.abs(rho[mask])) > X_SHAPE_TOL:
        raise ValueError("matrix is not X-shaped (support off diagonal/anti-diagonal)")
    d = np.diag(rho).real
    outer = abs(rho[0, 3]) - np.sqrt(max(d[1] * d[2], 0.0))
    inner = abs(rho[1, 2]) - np.sqrt(max(d[0] * d[3], 0.0))
    raw = 2.0 * max(outer, inner)
    return ConcurrenceResult(value=max(0.0, raw), raw=float(raw), method=Method.XSTATE)


def c_s1_closed(alpha: float, r: float, p: float) -> ConcurrenceResult:
    """Closed-form concurrence of the first family as a function of (alpha, r, P)."""
    r = validate_r(r)
    a2 = alpha * alpha
    bracket = (np.sqrt(1.0 - a2) * np.cos(r)
               - np.sqrt(p * (p * a2 + (1.0 - a2) * np.sin(r) ** 2)))
    raw = 2.0 * abs(alpha) * (1.0 - p) * bracket
    return ConcurrenceResult(value=max(0.0, raw), raw=float(raw), method=Method.CLOSED)


def c_s2_closed(alpha: float, r: float, p: float) -> ConcurrenceResult:
    """Closed-form concurrence of the second family as a function of (alpha, r, P)."""
    r = validate_r(r)
    a2 = alpha * alpha
    cr, sr = np.cos(r), np.sin(r)
    bracket = (np.sqrt(1.0 - a2) * cr
               - sr * np.sqrt(p * ((1.0 - a2) + a2 * (cr * cr + p * sr * sr))))
    raw = 2.0 * abs(alpha) * (1.0 - p) * bracket
    return ConcurrenceResult(value=max(0.0, raw), raw=float(raw), method=Method.CLOSED)


def concurrence_closed(family: Family, alpha: float, r: float, p: float) -> ConcurrenceResult:
    if family is Family.THETA1:
        return c_s1_closed(alpha, r, p)
    return c_s2_closed(alpha, r, p)
