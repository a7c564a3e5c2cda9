"""VQE ground-state search and VQD deflation for excited states."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from .ansatz import AnsatzSpec, Family, ansatz_gate, family_for, fold_theta, prepare, subspace_image
from .eigen import spectral_spread
from .molecule import CoefficientRow, hamiltonian_1q_A, hamiltonian_1q_B, hamiltonian_2q
from .optimize import DEFAULT_STARTS, NelderMeadConfig, minimize_multistart
from .pauli import DimensionMismatchError, PauliSum, matrix_of_sum
from .statevector import StateVector, basis_state, gate_matrix

log = logging.getLogger(__name__)

DEFAULT_BETA = 3.0
FORMULATIONS = ("two_qubit", "one_qubit")


class BetaTooSmallError(ValueError):
    pass


@dataclass(frozen=True)
class DeflationTerm:
    beta: float
    state: StateVector

    def __post_init__(self):
        if not self.beta > 0:
            raise ValueError(f"deflation weight must be positive, got {self.beta}")


@dataclass(frozen=True)
class EnergyPoint:
    R: float | None
    formulation: str
    block: str
    level: int
    energy: float
    theta_opt: float
    evaluations: int
    converged: bool = True

    def __post_init__(self):
        if not np.isfinite(self.energy):
            raise ValueError("energy must be finite")
        if self.level not in (0, 1):
            raise ValueError(f"level must be 0 or 1 within a block, got {self.level}")

    def as_dict(self) -> dict:
        return {
            "R": self.R,
            "formulation": self.formulation,
            "block": self.block,
            "level": self.level,
            "energy": self.energy,
            "theta_opt": self.theta_opt,
            "evaluations": self.evaluations,
            "converged": self.converged,
        }


def vqe_objective(
    h: PauliSum, family: Family, deflation: Sequence[DeflationTerm] = ()
) -> Callable[[float], float]:
    """theta -> <psi(theta)|H|psi(theta)> + sum_i beta_i |<phi_i|psi(theta)>|^2."""
    family = Family(family)
    if h.n_qubits != family.n_qubits:
        raise DimensionMismatchError(
            f"{family.value} prepares {family.n_qubits}-qubit states, Hamiltonian has {h.n_qubits}"
        )
    for term in deflation:
        if term.state.n_qubits != family.n_qubits:
            raise DimensionMismatchError("deflation state dimension does not match the ansatz")
    hm = matrix_of_sum(h)
    ref = basis_state(family.reference).amplitudes
    penalties = [(t.beta, t.state.amplitudes.conj()) for t in deflation]

    def energy(theta: float) -> float:
        psi = gate_matrix(ansatz_gate(family, theta), family.n_qubits) @ ref
        val = np.vdot(psi, hm @ psi).real
        for beta, bra in penalties:
            val += beta * abs(bra @ psi) ** 2
        return float(val)

    return energy


def _point(res, family: Family, level: int, R, h: PauliSum, deflation=()) -> EnergyPoint:
    theta = fold_theta(res.best_point)
    # report the plain energy; the optimizer value includes deflation penalties
    energy = vqe_objective(h, family)(theta) if deflation else res.best_value
    if not res.converged:
        log.warning("optimizer did not converge for %s level %d at R=%s", family.value, level, R)
    return EnergyPoint(
        R, family.formulation, family.block, level, energy, theta, res.evaluations, res.converged
    )


def solve_ground(
    h: PauliSum,
    family: Family,
    cfg: NelderMeadConfig = NelderMeadConfig(),
    *,
    starts: Sequence[float] = DEFAULT_STARTS,
    R: float | None = None,
) -> EnergyPoint:
    family = Family(family)
    res = minimize_multistart(vqe_objective(h, family), cfg, starts)
    return _point(res, family, 0, R, h)


def state_of(point: EnergyPoint, family: Family) -> StateVector:
    return prepare(AnsatzSpec(family, point.theta_opt))


def ansatz_spread(h: PauliSum, family: Family) -> float:
    """Spectral spread of ``h`` restricted to the subspace the ansatz can reach."""
    m = matrix_of_sum(h)
    if family.n_qubits == 2:
        idx = [int(label, 2) for label in subspace_image(family)]
        m = m[np.ix_(idx, idx)]
    return spectral_spread(m)


def check_beta(h: PauliSum, beta: float, family: Family) -> float:
    """Reject deflation weights that cannot lift the found state above the rest of the subspace."""
    spread = ansatz_spread(h, family)
    if beta < 0:
        raise BetaTooSmallError(f"beta must be non-negative, got {beta}")
    if 0 < beta <= spread:
        raise BetaTooSmallError(
            f"beta={beta:g} Ha does not exceed the spectral spread {spread:.6f} Ha of the "
            "Hamiltonian on the ansatz subspace, so the deflated minimum could still be "
            "the penalized ground state"
        )
    return spread


def default_beta(h: PauliSum, family: Family) -> float:
    """DEFAULT_BETA unless it fails :func:`check_beta`, in which case 1.5x the spread."""
    spread = ansatz_spread(h, family)
    return DEFAULT_BETA if DEFAULT_BETA > spread else 1.5 * spread


def solve_excited(
    h: PauliSum,
    family: Family,
    ground: EnergyPoint,
    beta: float = DEFAULT_BETA,
    cfg: NelderMeadConfig = NelderMeadConfig(),
    *,
    starts: Sequence[float] = DEFAULT_STARTS,
    R: float | None = None,
) -> EnergyPoint:
    """First excited state of ``h`` within the family's subspace by deflating ``ground``.

    ``beta=0`` switches the penalty off and simply finds the ground energy again.
    """
    family = Family(family)
    check_beta(h, beta, family)
    deflation = [DeflationTerm(beta, state_of(ground, family))] if beta > 0 else []
    res = minimize_multistart(vqe_objective(h, family, deflation), cfg, starts)
    return _point(res, family, 1, R if R is not None else ground.R, h, deflation)


def block_hamiltonian(row: CoefficientRow, formulation: str, block: str) -> PauliSum:
    if formulation == "two_qubit":
        return hamiltonian_2q(row)
    if formulation == "one_qubit":
        return hamiltonian_1q_A(row) if block == "A" else hamiltonian_1q_B(row)
    raise ValueError(f"unknown formulation {formulation!r}; expected one of {FORMULATIONS}")


def solve_block(
    row: CoefficientRow,
    formulation: str,
    block: str,
    beta: float | None = None,
    cfg: NelderMeadConfig = NelderMeadConfig(),
) -> tuple[EnergyPoint, EnergyPoint]:
    """Ground and first excited level of one block. ``beta=None`` picks :func:`default_beta`."""
    formulation = formulation.replace("-", "_")
    family = family_for(formulation, block)
    h = block_hamiltonian(row, formulation, block)
    ground = solve_ground(h, family, cfg, R=row.R)
    if beta is None:
        beta = default_beta(h, family)
    excited = solve_excited(h, family, ground, beta, cfg, R=row.R)
    return ground, excited


def solve_all_levels(
    row: CoefficientRow,
    formulation: str,
    beta: float | None = None,
    cfg: NelderMeadConfig = NelderMeadConfig(),
) -> list[EnergyPoint]:
    """[A0, A1, B0, B1] for one internuclear distance."""
    out: list[EnergyPoint] = []
    for block in ("A", "B"):
        out.extend(solve_block(row, formulation, block, beta, cfg))
    return out
