"""Pauli strings, weighted Pauli sums and their dense matrix realizations.

Qubit ordering: the leftmost label of a string acts on qubit 1, which is the
leftmost symbol of a ket and the most significant bit of the amplitude index.
So ``ZI|01> = |01>`` and ``IZ|01> = -|01>``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Mapping

import numpy as np

PAULI_LABELS = "IXYZ"

_SINGLE = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}
for _m in _SINGLE.values():
    _m.flags.writeable = False

# terms with smaller weight are dropped after merging
PRUNE_TOLERANCE = 1e-15
HERMITIAN_TOLERANCE = 1e-12

H2_OPERATOR_TEMPLATE = ("II", "ZI", "IZ", "ZZ", "XX")


class DimensionMismatchError(ValueError):
    """Operands act on different numbers of qubits."""


class UnsupportedTermError(ValueError):
    """A Pauli string outside the set an operation knows how to handle."""


class NonHermitianError(ValueError):
    pass


@dataclass(frozen=True)
class PauliString:
    labels: str

    def __post_init__(self):
        labels = str(self.labels).upper()
        if not labels:
            raise ValueError("a Pauli string needs at least one label")
        bad = set(labels) - set(PAULI_LABELS)
        if bad:
            raise ValueError(f"invalid Pauli labels {sorted(bad)} in {self.labels!r}")
        object.__setattr__(self, "labels", labels)

    @property
    def n_qubits(self) -> int:
        return len(self.labels)

    def __str__(self) -> str:
        return self.labels

    def __len__(self) -> int:
        return len(self.labels)


def as_pauli(p: PauliString | str) -> PauliString:
    return p if isinstance(p, PauliString) else PauliString(p)


def matrix_of(p: PauliString | str) -> np.ndarray:
    """Dense ``2**n x 2**n`` matrix of a Pauli string (qubit 1 = leftmost factor)."""
    p = as_pauli(p)
    return reduce(np.kron, (_SINGLE[c] for c in p.labels))


class PauliSum:
    """Real-weighted sum of Pauli strings of a common length.

    Repeated strings are merged on construction and near-zero weights pruned.
    An empty sum is allowed as long as ``n_qubits`` is given.
    """

    __slots__ = ("_terms", "_n_qubits")

    def __init__(
        self,
        terms: Iterable[tuple[float, PauliString | str]] | Mapping[str, float] = (),
        n_qubits: int | None = None,
    ):
        if isinstance(terms, Mapping):
            terms = [(c, s) for s, c in terms.items()]
        merged: dict[PauliString, float] = {}
        for coeff, string in terms:
            string = as_pauli(string)
            coeff = float(coeff)
            if not np.isfinite(coeff):
                raise ValueError(f"non-finite coefficient for {string}")
            if n_qubits is None:
                n_qubits = string.n_qubits
            elif string.n_qubits != n_qubits:
                raise DimensionMismatchError(
                    f"term {string} acts on {string.n_qubits} qubits, expected {n_qubits}"
                )
            merged[string] = merged.get(string, 0.0) + coeff
        if n_qubits is None:
            raise ValueError("an empty PauliSum needs an explicit n_qubits")
        self._terms = tuple(
            (c, s) for s, c in merged.items() if abs(c) >= PRUNE_TOLERANCE
        )
        self._n_qubits = int(n_qubits)

    @property
    def terms(self) -> tuple[tuple[float, PauliString], ...]:
        return self._terms

    @property
    def n_qubits(self) -> int:
        return self._n_qubits

    def coefficient(self, string: PauliString | str) -> float:
        string = as_pauli(string)
        for c, s in self._terms:
            if s == string:
                return c
        return 0.0

    def scaled(self, factor: float) -> "PauliSum":
        return PauliSum([(factor * c, s) for c, s in self._terms], self._n_qubits)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(self._terms)

    def __eq__(self, other) -> bool:
        if not isinstance(other, PauliSum):
            return NotImplemented
        return self._n_qubits == other._n_qubits and dict(
            (s, c) for c, s in self._terms
        ) == dict((s, c) for c, s in other._terms)

    def __hash__(self):
        return hash((self._n_qubits, frozenset((s, c) for c, s in self._terms)))

    def __repr__(self) -> str:
        if not self._terms:
            return f"PauliSum(0, n_qubits={self._n_qubits})"
        body = " + ".join(f"{c:+.6g}*{s}" for c, s in self._terms)
        return f"PauliSum({body})"


def matrix_of_sum(h: PauliSum) -> np.ndarray:
    dim = 2**h.n_qubits
    m = np.zeros((dim, dim), dtype=complex)
    for coeff, string in h.terms:
        if string.n_qubits != h.n_qubits:
            raise DimensionMismatchError(f"{string} does not act on {h.n_qubits} qubits")
        m += coeff * matrix_of(string)
    return m


def check_hermitian(m: np.ndarray, tol: float = HERMITIAN_TOLERANCE) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NonHermitianError(f"expected a square matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise NonHermitianError("matrix has non-finite entries")
    if np.max(np.abs(m - m.conj().T), initial=0.0) > tol:
        raise NonHermitianError("matrix is not Hermitian")
    return m


# computational basis indices (qubit 1 most significant)
_BLOCK_A = (0b01, 0b10)
_BLOCK_B = (0b00, 0b11)


def block_decompose_h2(h: PauliSum) -> tuple[np.ndarray, np.ndarray]:
    """Split a two-qubit H2-type Hamiltonian into its invariant 2x2 blocks.

    Returns ``(block_A, block_B)``: block A acts on span{|01>, |10>} and block B
    on span{|00>, |11>}, each in the stated basis order.
    """
    if h.n_qubits != 2:
        raise DimensionMismatchError(f"expected a two-qubit sum, got {h.n_qubits} qubits")
    for _, s in h.terms:
        if s.labels not in H2_OPERATOR_TEMPLATE:
            raise UnsupportedTermError(
                f"term {s} is not one of {', '.join(H2_OPERATOR_TEMPLATE)}"
            )
    m = matrix_of_sum(h)
    block_a = m[np.ix_(_BLOCK_A, _BLOCK_A)].copy()
    block_b = m[np.ix_(_BLOCK_B, _BLOCK_B)].copy()
    return block_a, block_b
