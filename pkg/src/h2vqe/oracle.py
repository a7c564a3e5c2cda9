"""Exact spectra of the H2 Hamiltonians, used as ground truth.

Block eigenvalues come from the closed-form 2x2 solution on the block
decomposition; the full 4x4 spectrum comes from Jacobi. The two are
independent routes and a report records whether they agree.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .eigen import eigensystem, eigh_2x2, jacobi_eigh, reconstruction_residual
from .molecule import CoefficientRow, hamiltonian_2q
from .pauli import block_decompose_h2, matrix_of_sum

UNION_TOLERANCE = 1e-10
RESIDUAL_TOLERANCE = 1e-10


@dataclass(frozen=True)
class SpectrumReport:
    R: float
    eigenvalues_4q: tuple[float, float, float, float]
    eigenvalues_A: tuple[float, float]
    eigenvalues_B: tuple[float, float]
    residual: float

    @property
    def union_error(self) -> float:
        union = np.sort(np.concatenate([self.eigenvalues_A, self.eigenvalues_B]))
        return float(np.max(np.abs(union - np.asarray(self.eigenvalues_4q))))

    @property
    def consistent(self) -> bool:
        return self.union_error <= UNION_TOLERANCE and self.residual <= RESIDUAL_TOLERANCE

    def block(self, name: str) -> tuple[float, float]:
        return self.eigenvalues_A if name == "A" else self.eigenvalues_B


def _pair_residual(m: np.ndarray, values: np.ndarray, vectors: np.ndarray) -> float:
    """max over k of ||M v_k - lambda_k v_k||, and the reconstruction error."""
    eig = max(float(np.linalg.norm(m @ vectors[:, k] - values[k] * vectors[:, k])) for k in range(len(values)))
    return max(eig, reconstruction_residual(m, values, vectors))


def full_report(row: CoefficientRow) -> SpectrumReport:
    h = hamiltonian_2q(row)
    m = matrix_of_sum(h)
    block_a, block_b = block_decompose_h2(h)
    va, xa = eigh_2x2(block_a)
    vb, xb = eigh_2x2(block_b)
    v4, x4 = jacobi_eigh(m)
    residual = max(
        _pair_residual(block_a, va, xa),
        _pair_residual(block_b, vb, xb),
        _pair_residual(m, v4, x4),
    )
    return SpectrumReport(
        row.R,
        tuple(float(x) for x in v4),
        tuple(float(x) for x in va),
        tuple(float(x) for x in vb),
        residual,
    )


def ground_and_excited(m: np.ndarray) -> tuple[float, float]:
    values = eigensystem(m)[0]
    return float(values[0]), float(values[1])
