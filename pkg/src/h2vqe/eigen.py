"""Small dense Hermitian eigensolvers: closed form for 2x2, cyclic Jacobi up to 8x8."""
from __future__ import annotations

import math

import numpy as np

from .pauli import check_hermitian

MAX_DIMENSION = 8
JACOBI_TOLERANCE = 1e-14
MAX_SWEEPS = 100


def eigh_2x2(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form eigenpairs of a 2x2 Hermitian matrix, ascending.

    For ``[[d1, c], [c*, d2]]`` the eigenvalues are
    ``(d1 + d2)/2 -/+ sqrt(((d1 - d2)/2)**2 + |c|**2)``.
    """
    d1, d2 = m[0, 0].real, m[1, 1].real
    c = m[0, 1]
    mean = 0.5 * (d1 + d2)
    half = 0.5 * (d1 - d2)
    radius = math.hypot(half, abs(c))
    values = np.array([mean - radius, mean + radius])
    if abs(c) == 0.0:
        vecs = np.eye(2, dtype=complex)
        if d1 > d2:
            vecs = vecs[:, ::-1]
        return values, vecs.copy()
    vecs = np.empty((2, 2), dtype=complex)
    for k, lam in enumerate(values):
        # two equivalent null vectors of (M - lam); keep the better conditioned one
        u = np.array([c, lam - d1])
        w = np.array([lam - d2, np.conj(c)])
        v = u if np.linalg.norm(u) >= np.linalg.norm(w) else w
        vecs[:, k] = v / np.linalg.norm(v)
    return values, vecs


def _off_norm(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def jacobi_eigh(
    m: np.ndarray, tol: float = JACOBI_TOLERANCE, max_sweeps: int = MAX_SWEEPS
) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic Jacobi diagonalization of a complex Hermitian matrix.

    Each rotation first removes the phase of the pivot so the real two-by-two
    Jacobi rotation applies. Iterates until the off-diagonal Frobenius norm
    drops below ``tol`` times the matrix scale.
    """
    a = np.array(m, dtype=complex)
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = max(np.linalg.norm(a), 1.0)
    for _ in range(max_sweeps):
        if _off_norm(a) <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag <= 1e-300:
                    continue
                phase = apq / mag
                app, aqq = a[p, p].real, a[q, q].real
                theta = (aqq - app) / (2.0 * mag)
                t = math.copysign(1.0, theta) / (abs(theta) + math.sqrt(theta * theta + 1.0))
                cs = 1.0 / math.sqrt(t * t + 1.0)
                sn = t * cs
                # J = D R with D = diag(.., 1 at p, conj(phase) at q, ..)
                j = np.eye(n, dtype=complex)
                j[p, p] = cs
                j[p, q] = sn
                j[q, p] = -sn * np.conj(phase)
                j[q, q] = cs * np.conj(phase)
                a = j.conj().T @ a @ j
                a[p, q] = a[q, p] = 0.0
                v = v @ j
    else:
        raise RuntimeError(f"Jacobi did not converge in {max_sweeps} sweeps")
    values = np.diag(a).real.copy()
    order = np.argsort(values, kind="stable")
    return values[order], v[:, order]


def eigensystem(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Ascending eigenvalues and unit eigenvectors (as columns) of a Hermitian matrix."""
    m = check_hermitian(m)
    n = m.shape[0]
    if n > MAX_DIMENSION:
        raise ValueError(f"dimension {n} exceeds the supported maximum {MAX_DIMENSION}")
    if n == 1:
        return np.array([m[0, 0].real]), np.ones((1, 1), dtype=complex)
    if n == 2:
        return eigh_2x2(m)
    return jacobi_eigh(m)


def exact_spectrum(m: np.ndarray) -> np.ndarray:
    return eigensystem(m)[0]


def reconstruction_residual(m: np.ndarray, values: np.ndarray, vectors: np.ndarray) -> float:
    """Max-abs entry of ``M - V diag(values) V^dagger``."""
    rebuilt = (vectors * values) @ vectors.conj().T
    return float(np.max(np.abs(np.asarray(m) - rebuilt)))


def spectral_spread(m: np.ndarray) -> float:
    values = exact_spectrum(m)
    return float(values[-1] - values[0])
