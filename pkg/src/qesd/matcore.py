"""Dense complex-matrix substrate for 2/4/8-dimensional density operators.

Everything here is a pure function over numpy complex arrays.  The
eigensolver is a cyclic Jacobi iteration: the matrices are at most 8x8,
so a deterministic, dependency-light solver is preferable to a general
LAPACK call.
"""

from __future__ import annotations

import numpy as np

JACOBI_MAX_SWEEPS = 100
JACOBI_OFF_TOL = 1e-14

HERMITIAN_TOL = 1e-10
PSD_FLOOR = -1e-10


class HermitianError(ValueError):
    """Input matrix is not Hermitian within tolerance."""


class PositivityError(ValueError):
    """Input matrix has an eigenvalue below the round-off floor."""


def as_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.view(float))):
        raise ValueError("matrix contains NaN or Inf entries")
    return m


def tensor(a, b) -> np.ndarray:
    """Kronecker product with the left factor as the most-significant subsystem."""
    return np.kron(as_matrix(a), as_matrix(b))


def partial_trace_last(m) -> np.ndarray:
    """Trace out the least-significant qubit of an operator on n qubits."""
    m = as_matrix(m)
    d = m.shape[0]
    if d % 2 != 0:
        raise ValueError(f"dimension {d} is not a multiple of 2")
    half = d // 2
    return np.einsum("ikjk->ij", m.reshape(half, 2, half, 2))


def _check_hermitian(m: np.ndarray, tol: float) -> None:
    dev = np.max(np.abs(m - m.conj().T))
    if dev > tol:
        raise HermitianError(f"matrix deviates from Hermitian by {dev:.3e} (tol {tol:.1e})")


def eig_hermitian(m, tol: float = HERMITIAN_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Returns (eigenvalues, eigenvectors) with eigenvalues sorted descending
    and eigenvectors as the corresponding columns of a unitary matrix.
    """
    a = as_matrix(m).copy()
    _check_hermitian(a, tol)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    for _ in range(JACOBI_MAX_SWEEPS):
        off = 0.0
        for p in range(n - 1):
            off = max(off, np.max(np.abs(a[p, p + 1:])))
        if off < JACOBI_OFF_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < JACOBI_OFF_TOL * 1e-2:
                    continue
                theta = 0.5 * np.arctan2(2.0 * abs(apq), a[q, q].real - a[p, p].real)
                c = np.cos(theta)
                s = np.sin(theta) * (apq / abs(apq))
                u = np.eye(n, dtype=complex)
                u[p, p] = c
                u[q, q] = c
                u[p, q] = s
                u[q, p] = -np.conj(s)
                a = u.conj().T @ a @ u
                v = v @ u
    w = np.diag(a).real.copy()
    order = np.argsort(-w, kind="stable")
    return w[order], v[:, order]


def sqrt_psd(m, floor: float = PSD_FLOOR) -> np.ndarray:
    """Hermitian square root of a PSD matrix.

    Eigenvalues in [floor, 0) are treated as round-off and clamped to 0;
    anything below the floor raises, since that indicates a caller bug
    rather than numerical noise.
    """
    w, v = eig_hermitian(m)
    if w[-1] < floor:
        raise PositivityError(f"eigenvalue {w[-1]:.3e} below PSD floor {floor:.1e}")
    w = np.clip(w, 0.0, None)
    s = (v * np.sqrt(w)) @ v.conj().T
    return 0.5 * (s + s.conj().T)


def check_density_matrix(rho, herm_tol: float = 1e-12, trace_tol: float = 1e-12,
                         psd_floor: float = PSD_FLOOR) -> np.ndarray:
    """Validate Hermiticity, unit trace and positivity of a 4x4 density matrix."""
    rho = as_matrix(rho)
    if rho.shape[0] != 4:
        raise ValueError(f"expected a 4x4 density matrix, got {rho.shape}")
    _check_hermitian(rho, herm_tol)
    tr = np.trace(rho).real
    if abs(tr - 1.0) > trace_tol:
        raise ValueError(f"trace {tr!r} deviates from 1 beyond {trace_tol:.1e}")
    w, _ = eig_hermitian(0.5 * (rho + rho.conj().T))
    if w[-1] < psd_floor:
        raise PositivityError(f"density matrix eigenvalue {w[-1]:.3e} below {psd_floor:.1e}")
    return rho
