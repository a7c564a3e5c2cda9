# %% [markdown]
# The same energies from one qubit
#
# Mapping |01> -> |0> and |10> -> |1> turns block A into the one-qubit
# Hamiltonian (a0 - a3) I + (a1 - a2) Z + a4 X with ansatz exp(-i theta Y)|0>.
# Block B becomes (a0 + a3) I + (a1 + a2) Z + a4 X with exp(+i theta Y)|0>.
# The energy landscape is c_I + c_Z cos(2 theta) +/- c_X sin(2 theta), and its
# minimum is c_I - sqrt(c_Z^2 + c_X^2).

# %%
import math

import numpy as np

from h2vqe import Family, default_table, hamiltonian_1q_A, hamiltonian_1q_B, solve_all_levels, vqe_objective
from h2vqe.molecule import hamiltonian_2q

table = default_table()
row = table.row(1.00)

# %% The landscapes agree with the two-qubit ones for every theta
f2 = vqe_objective(hamiltonian_2q(row), Family.TWO_QUBIT_XY_ON_01)
f1 = vqe_objective(hamiltonian_1q_A(row), Family.ONE_QUBIT_MINUS_Y)
thetas = np.linspace(-math.pi / 2, math.pi / 2, 7)
print("max |E_2q - E_1q| on a theta grid:", max(abs(f2(t) - f1(t)) for t in thetas))

# %% Closed-form check of the block-B ground energy (a1 + a2 = 0 in this table)
hb = hamiltonian_1q_B(row)
print(hb)
print("closed form:", row.a0 + row.a3 - row.a4)

# %% Both formulations over the full table
worst = 0.0
for row in table:
    two = solve_all_levels(row, "two_qubit")
    one = solve_all_levels(row, "one_qubit")
    worst = max(worst, max(abs(p.energy - q.energy) for p, q in zip(two, one)))
print(f"largest two-qubit vs one-qubit difference over 16 distances: {worst:.2e} Ha")
