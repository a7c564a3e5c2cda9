"""Variational ground- and excited-state energies of H2 from its parity-mapped qubit Hamiltonian.

Two formulations are supported: the two-qubit Hamiltonian with the
``exp(i theta XY)`` UCCSD ansatz, and its two single-qubit reductions with a
Y-rotation ansatz. Every result can be checked against exact diagonalization.
"""
__version__ = "0.1.0"

from .ansatz import AnsatzSpec, Family, family_for, prepare, subspace_image
from .eigen import eigensystem, exact_spectrum
from .measurement import (
    MappingRecipe,
    ShotEstimate,
    energy_from_measurements,
    measure_exact,
    measure_shots,
    recipe_for,
)
from .molecule import (
    CoefficientRow,
    CoefficientTable,
    default_table,
    dump_table,
    hamiltonian_1q_A,
    hamiltonian_1q_B,
    hamiltonian_2q,
    load_table,
)
from .optimize import NelderMeadConfig, OptimizationResult, minimize, minimize_multistart
from .oracle import SpectrumReport, full_report
from .pauli import PauliString, PauliSum, block_decompose_h2, matrix_of, matrix_of_sum
from .statevector import Gate, StateVector, apply, basis_state, expectation
from .variational import (
    DeflationTerm,
    EnergyPoint,
    solve_all_levels,
    solve_excited,
    solve_ground,
    vqe_objective,
)
