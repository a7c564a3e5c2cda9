"""Dense statevector simulation for one- and two-qubit circuits.

Amplitudes are indexed by the integer value of the bitstring with qubit 1 as
the most significant bit, so ``|01>`` is index 1 and ``|10>`` is index 2.
Qubits are numbered from 1, as in the circuit diagrams they model.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .pauli import DimensionMismatchError, PauliString, PauliSum, matrix_of, matrix_of_sum

MAX_QUBITS = 2
NORM_TOLERANCE = 1e-12

_SQRT1_2 = 1.0 / math.sqrt(2.0)
_FIXED = {
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
    "H": np.array([[1, 1], [1, -1]], dtype=complex) * _SQRT1_2,
}
SINGLE_QUBIT_KINDS = ("X", "Y", "Z", "H", "Rx", "Ry", "Rz")
KINDS = SINGLE_QUBIT_KINDS + ("CNOT", "ExpXY")


class StateVector:
    """Normalized amplitude vector on 1 or 2 qubits (immutable)."""

    __slots__ = ("_amps",)

    def __init__(self, amplitudes, *, normalize: bool = False):
        amps = np.array(amplitudes, dtype=complex).reshape(-1)
        n = amps.size.bit_length() - 1
        if amps.size < 2 or amps.size != 2**n or n > MAX_QUBITS:
            raise DimensionMismatchError(
                f"state length must be 2**n for n in 1..{MAX_QUBITS}, got {amps.size}"
            )
        norm = np.linalg.norm(amps)
        if normalize:
            if norm == 0.0 or not np.isfinite(norm):
                raise ValueError("cannot normalize a zero or non-finite vector")
            amps = amps / norm
        elif abs(norm - 1.0) > NORM_TOLERANCE:
            raise ValueError(f"state is not normalized (norm = {norm!r})")
        amps.flags.writeable = False
        self._amps = amps

    @property
    def amplitudes(self) -> np.ndarray:
        return self._amps

    @property
    def n_qubits(self) -> int:
        return self._amps.size.bit_length() - 1

    def __len__(self) -> int:
        return self._amps.size

    def __array__(self, dtype=None, copy=None):
        return self._amps if dtype is None else self._amps.astype(dtype)

    def inner(self, other: "StateVector") -> complex:
        """<self|other>."""
        if len(other) != len(self):
            raise DimensionMismatchError("states have different dimensions")
        return complex(np.vdot(self._amps, other._amps))

    def __repr__(self) -> str:
        return f"StateVector({np.array2string(self._amps, precision=6)})"


def basis_state(label: str) -> StateVector:
    """Computational basis state from a bitstring such as ``"01"``."""
    label = str(label)
    if not 1 <= len(label) <= MAX_QUBITS or set(label) - {"0", "1"}:
        raise ValueError(f"basis label must be 1-{MAX_QUBITS} binary digits, got {label!r}")
    amps = np.zeros(2 ** len(label), dtype=complex)
    amps[int(label, 2)] = 1.0
    return StateVector(amps)


@dataclass(frozen=True)
class Gate:
    """A gate instruction.

    ``qubit`` is the target of a single-qubit gate; ``control``/``target`` apply
    to CNOT. ExpXY is ``exp(i*angle*X(x)Y)`` on both qubits. Rotations follow
    ``R_P(angle) = exp(-i*angle*P/2)``.
    """

    kind: str
    angle: float | None = None
    qubit: int = 1
    control: int = 1
    target: int = 2

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}; expected one of {KINDS}")
        parametric = self.kind in ("Rx", "Ry", "Rz", "ExpXY")
        if parametric and self.angle is None:
            raise ValueError(f"{self.kind} needs an angle")
        if not parametric and self.angle is not None:
            raise ValueError(f"{self.kind} takes no angle")
        if self.kind == "CNOT" and self.control == self.target:
            raise ValueError("CNOT control and target must differ")

    @property
    def arity(self) -> int:
        return 2 if self.kind in ("CNOT", "ExpXY") else 1

    def qubits(self) -> tuple[int, ...]:
        if self.kind == "CNOT":
            return (self.control, self.target)
        if self.kind == "ExpXY":
            return (1, 2)
        return (self.qubit,)

    def local_matrix(self) -> np.ndarray:
        """Matrix on the gate's own qubits (2x2 or 4x4)."""
        k = self.kind
        if k in _FIXED:
            return _FIXED[k]
        if k in ("Rx", "Ry", "Rz"):
            c, s = math.cos(self.angle / 2), math.sin(self.angle / 2)
            if k == "Rx":
                return np.array([[c, -1j * s], [-1j * s, c]])
            if k == "Ry":
                return np.array([[c, -s], [s, c]], dtype=complex)
            return np.array([[c - 1j * s, 0], [0, c + 1j * s]])
        if k == "ExpXY":
            return _expxy_matrix(self.angle)
        m = np.eye(4, dtype=complex)
        m[2:, 2:] = _FIXED["X"]
        return m


def _expxy_matrix(theta: float) -> np.ndarray:
    # columns are the images of |00>, |01>, |10>, |11>:
    #   |00> -> c|00> - s|11>    |01> -> c|01> + s|10>
    #   |10> -> c|10> - s|01>    |11> -> c|11> + s|00>
    c, s = math.cos(theta), math.sin(theta)
    return np.array(
        [
            [c, 0, 0, s],
            [0, c, -s, 0],
            [0, s, c, 0],
            [-s, 0, 0, c],
        ],
        dtype=complex,
    )


def gate_matrix(g: Gate, n_qubits: int) -> np.ndarray:
    """Full ``2**n x 2**n`` matrix of a gate on an ``n``-qubit register."""
    if g.arity > n_qubits or any(not 1 <= q <= n_qubits for q in g.qubits()):
        raise DimensionMismatchError(
            f"{g.kind} on qubits {g.qubits()} does not fit a {n_qubits}-qubit state"
        )
    local = g.local_matrix()
    if g.arity == 1:
        factors = [local if q == g.qubit else np.eye(2) for q in range(1, n_qubits + 1)]
        out = factors[0]
        for f in factors[1:]:
            out = np.kron(out, f)
        return np.asarray(out, dtype=complex)
    if g.kind == "CNOT" and (g.control, g.target) == (2, 1):
        swap = np.eye(4)[[0, 2, 1, 3]]
        return swap @ local @ swap
    return local


def apply(g: Gate, s: StateVector) -> StateVector:
    out = gate_matrix(g, s.n_qubits) @ s.amplitudes
    # renormalize away rounding drift; unitarity keeps this within 1e-15
    return StateVector(out / np.linalg.norm(out))


def run(circuit, s: StateVector) -> StateVector:
    for g in circuit:
        s = apply(g, s)
    return s


def expectation(h: PauliSum | PauliString | str, s: StateVector) -> float:
    """``<s|h|s>`` for a Pauli string or Pauli sum."""
    if isinstance(h, str):
        h = PauliString(h)
    if h.n_qubits != s.n_qubits:
        raise DimensionMismatchError(
            f"observable acts on {h.n_qubits} qubits, state has {s.n_qubits}"
        )
    m = matrix_of_sum(h) if isinstance(h, PauliSum) else matrix_of(h)
    return expectation_matrix(m, s)


def expectation_matrix(m: np.ndarray, s: StateVector) -> float:
    psi = s.amplitudes
    val = np.vdot(psi, m @ psi)
    if abs(val.imag) > 1e-10 * max(1.0, abs(val.real)):
        raise ValueError(f"expectation has imaginary part {val.imag!r}; observable not Hermitian?")
    return float(val.real)
