"""Read Pauli expectations through a single-qubit Z measurement.

Each supported observable P has a mapping circuit U and a readout qubit k with
``U P U^dagger = Z_k``, so ``<P>`` on a state equals ``<Z_k>`` on ``U|psi>``.
Finite-shot estimates draw ±1 outcomes from the mapped state's Z distribution.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .molecule import CoefficientRow
from .pauli import DimensionMismatchError, PauliString, as_pauli
from .statevector import Gate, StateVector, run

DEFAULT_SHOTS = 4096

_RECIPES = {
    "ZI": ((), 1),
    "IZ": ((), 2),
    "ZZ": ((Gate("CNOT", control=1, target=2),), 2),
    "XX": ((Gate("H", qubit=1), Gate("H", qubit=2), Gate("CNOT", control=1, target=2)), 2),
    "Z": ((), 1),
    "X": ((Gate("H", qubit=1),), 1),
}
SUPPORTED = tuple(_RECIPES)


class UnsupportedObservableError(ValueError):
    pass


@dataclass(frozen=True)
class MappingRecipe:
    observable: PauliString
    circuit: tuple[Gate, ...]
    readout_qubit: int


@dataclass(frozen=True)
class ShotEstimate:
    mean: float
    standard_error: float
    shots: int


@dataclass(frozen=True)
class MeasuredEnergy:
    energy: float
    error: float
    shots: int | None = None


def recipe_for(observable: PauliString | str) -> MappingRecipe:
    p = as_pauli(observable)
    try:
        circuit, k = _RECIPES[p.labels]
    except KeyError:
        raise UnsupportedObservableError(
            f"no mapping for {p.labels}; supported observables: {', '.join(SUPPORTED)}"
        ) from None
    return MappingRecipe(p, circuit, k)


def _prob_plus(s: StateVector, observable) -> float:
    """Probability of a +1 Z outcome on the readout qubit after mapping."""
    recipe = recipe_for(observable)
    if recipe.observable.n_qubits != s.n_qubits:
        raise DimensionMismatchError(
            f"{recipe.observable} acts on {recipe.observable.n_qubits} qubits, state has {s.n_qubits}"
        )
    mapped = run(recipe.circuit, s)
    probs = np.abs(mapped.amplitudes) ** 2
    shift = s.n_qubits - recipe.readout_qubit
    idx = np.arange(probs.size)
    p0 = float(probs[((idx >> shift) & 1) == 0].sum())
    return min(max(p0, 0.0), 1.0)


def measure_exact(s: StateVector, observable: PauliString | str) -> float:
    return 2.0 * _prob_plus(s, observable) - 1.0


def measure_shots(
    s: StateVector,
    observable: PauliString | str,
    shots: int = DEFAULT_SHOTS,
    seed=None,
) -> ShotEstimate:
    """Sample ``shots`` single-qubit Z outcomes of the mapped state.

    ``seed`` is anything :func:`numpy.random.default_rng` accepts. The
    standard error uses the sample standard deviation (ddof=1).
    """
    shots = int(shots)
    if shots < 1:
        raise ValueError(f"shots must be >= 1, got {shots}")
    p = _prob_plus(s, observable)
    rng = np.random.default_rng(seed)
    n_plus = int(rng.binomial(shots, p))
    mean = (2 * n_plus - shots) / shots
    if shots == 1:
        return ShotEstimate(mean, 0.0, 1)
    # sum of squared deviations of ±1 outcomes is shots*(1 - mean^2)
    var = max(shots * (1.0 - mean * mean), 0.0) / (shots - 1)
    return ShotEstimate(mean, math.sqrt(var / shots), shots)


def observable_weights(row: CoefficientRow, n_qubits: int, block: str = "A") -> tuple[float, dict[str, float]]:
    """Constant offset and per-observable weights of the energy for one formulation."""
    a0, a1, a2, a3, a4 = row.coefficients
    if n_qubits == 2:
        return a0, {"ZI": a1, "IZ": a2, "ZZ": a3, "XX": a4}
    if n_qubits == 1:
        if block == "A":
            return a0 - a3, {"Z": a1 - a2, "X": a4}
        if block == "B":
            return a0 + a3, {"Z": a1 + a2, "X": a4}
        raise ValueError(f"block must be 'A' or 'B', got {block!r}")
    raise DimensionMismatchError(f"no H2 formulation on {n_qubits} qubits")


def energy_from_measurements(
    row: CoefficientRow,
    s: StateVector,
    mode: str = "exact",
    *,
    block: str = "A",
    shots: int = DEFAULT_SHOTS,
    seed=None,
) -> MeasuredEnergy:
    """Assemble the energy from mapped single-qubit Z readouts.

    Two-qubit states use the full Hamiltonian; single-qubit states use the
    reduced Hamiltonian of ``block``. In shots mode each observable gets its
    own child stream of ``seed`` and the error bar is the quadrature sum of the
    coefficient-weighted standard errors.
    """
    offset, weights = observable_weights(row, s.n_qubits, block)
    if mode == "exact":
        energy = offset + sum(w * measure_exact(s, p) for p, w in weights.items())
        return MeasuredEnergy(energy, 0.0, None)
    if mode != "shots":
        raise ValueError(f"mode must be 'exact' or 'shots', got {mode!r}")
    root = seed if isinstance(seed, np.random.SeedSequence) else np.random.SeedSequence(seed)
    # explicit child keys instead of spawn(), which would mutate a caller's SeedSequence
    streams = [
        np.random.SeedSequence(root.entropy, spawn_key=root.spawn_key + (i,))
        for i in range(len(weights))
    ]
    energy, var = offset, 0.0
    for (p, w), ss in zip(weights.items(), streams):
        est = measure_shots(s, p, shots, ss)
        energy += w * est.mean
        var += (w * est.standard_error) ** 2
    return MeasuredEnergy(energy, math.sqrt(var), shots)
