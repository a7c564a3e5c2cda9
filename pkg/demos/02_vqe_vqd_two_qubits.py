# %% [markdown]
# Ground and excited states on two qubits
#
# VQE minimizes <psi(theta)|H|psi(theta)> over the UCCSD state
# exp(i theta XY)|01>. VQD then adds beta |phi0><phi0| for the ground state
# phi0 and minimizes again, which lands on the next level. Starting from |00>
# instead reaches the other block.

# %%
from h2vqe import Family, default_table, full_report, hamiltonian_2q, solve_all_levels, solve_excited, solve_ground

table = default_table()
row = table.row(0.70)
h = hamiltonian_2q(row)

# %% One point, step by step
ground = solve_ground(h, Family.TWO_QUBIT_XY_ON_01, R=row.R)
excited = solve_excited(h, Family.TWO_QUBIT_XY_ON_01, ground, beta=3.0)
report = full_report(row)
print(f"VQE  E0 = {ground.energy:.8f}  theta = {ground.theta_opt:+.6f}  ({ground.evaluations} evaluations)")
print(f"VQD  E1 = {excited.energy:.8f}  theta = {excited.theta_opt:+.6f}")
print(f"exact block A: {report.eigenvalues_A}")

# %% The whole dissociation curve, all four levels
print(f"{'R':>5} {'A0':>10} {'A1':>10} {'B0':>10} {'B1':>10}   max |E - exact|")
for row in table:
    pts = solve_all_levels(row, "two_qubit")
    rep = full_report(row)
    err = max(abs(p.energy - rep.block(p.block)[p.level]) for p in pts)
    print(f"{row.R:5.2f} " + " ".join(f"{p.energy:10.5f}" for p in pts) + f"   {err:.1e}")
