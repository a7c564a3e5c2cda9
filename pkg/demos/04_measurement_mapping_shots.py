# %% [markdown]
# Reading energies through single-qubit Z measurements
#
# Each Pauli term is measured by running a short circuit that turns it into Z
# on one qubit: CNOT(1->2) maps ZZ to Z on qubit 2; Hadamards on both qubits
# followed by the same CNOT do the same for XX. With a finite number of shots
# each readout is a ±1 sample mean with a standard error, and the energy error
# bar is the weighted quadrature sum.

# %%
import math

import numpy as np

from h2vqe import AnsatzSpec, Family, default_table, energy_from_measurements, full_report, hamiltonian_2q
from h2vqe import measure_exact, measure_shots, prepare, recipe_for, solve_ground

row = default_table().row(0.70)
ground = solve_ground(hamiltonian_2q(row), Family.TWO_QUBIT_XY_ON_01)
state = prepare(AnsatzSpec(Family.TWO_QUBIT_XY_ON_01, ground.theta_opt))

# %% Recipes and exact readouts
for obs in ("ZI", "IZ", "ZZ", "XX"):
    r = recipe_for(obs)
    gates = " ".join(g.kind for g in r.circuit) or "(none)"
    print(f"<{obs}>: circuit {gates:<10} readout qubit {r.readout_qubit}  value {measure_exact(state, obs):+.6f}")

# %% Shot-noise estimates
exact = full_report(row).eigenvalues_A[0]
for shots in (100, 1000, 10000, 100000):
    m = energy_from_measurements(row, state, "shots", shots=shots, seed=42)
    print(f"{shots:>6} shots: E = {m.energy:+.5f} ± {m.error:.5f}   (exact {exact:+.5f})")

# %% Standard error shrinks as 1/sqrt(shots)
for shots in (100, 10000):
    errs = [measure_shots(state, "XX", shots, seed=s).mean - measure_exact(state, "XX") for s in range(300)]
    print(f"{shots:>6} shots: RMS(<XX>) * sqrt(N) = {math.sqrt(np.mean(np.square(errs))) * math.sqrt(shots):.4f}")
