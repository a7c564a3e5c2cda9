# %% [markdown]
# The H2 qubit Hamiltonian and its two blocks
#
# The parity-mapped H2 Hamiltonian is a0 II + a1 ZI + a2 IZ + a3 ZZ + a4 XX.
# Only XX mixes basis states, and it only pairs |01> with |10> and |00> with
# |11>. So the 4x4 matrix splits into two 2x2 blocks.

# %%
import numpy as np

from h2vqe import block_decompose_h2, default_table, exact_spectrum, hamiltonian_2q, matrix_of, matrix_of_sum
from h2vqe.statevector import basis_state

np.set_printoptions(precision=5, suppress=True)

# %% How each term acts on |01> and |10>
for term in ("II", "ZI", "IZ", "ZZ", "XX"):
    for ket in ("01", "10"):
        out = matrix_of(term) @ basis_state(ket).amplitudes
        k = int(np.flatnonzero(out)[0])
        print(f"{term}|{ket}> = {out[k].real:+.0f}|{k:02b}>")

# %% The Hamiltonian at R = 0.70 Angstrom
table = default_table()
row = table.row(0.70)
h = hamiltonian_2q(row)
print(h)
print(matrix_of_sum(h).real)

# %% Block decomposition: the union of block spectra is the full spectrum
block_a, block_b = block_decompose_h2(h)
print("block A (|01>,|10>):\n", block_a.real)
print("block B (|00>,|11>):\n", block_b.real)
print("full spectrum :", exact_spectrum(matrix_of_sum(h)))
print("block spectra :", np.sort(np.concatenate([exact_spectrum(block_a), exact_spectrum(block_b)])))
