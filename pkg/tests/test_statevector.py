import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from h2vqe.molecule import hamiltonian_2q
from h2vqe.pauli import DimensionMismatchError, PauliSum, matrix_of_sum
from h2vqe.statevector import Gate, StateVector, apply, basis_state, expectation, gate_matrix

from conftest import random_state, row_at

angles = st.floats(min_value=-10, max_value=10, allow_nan=False)


def test_basis_states():
    np.testing.assert_array_equal(basis_state("01").amplitudes, [0, 1, 0, 0])
    np.testing.assert_array_equal(basis_state("0").amplitudes, [1, 0])
    np.testing.assert_array_equal(basis_state("11").amplitudes, [0, 0, 0, 1])


@pytest.mark.parametrize("label", ["", "2", "0a", "012"])
def test_bad_basis_labels(label):
    with pytest.raises(ValueError):
        basis_state(label)


def test_unnormalized_state_rejected():
    with pytest.raises(ValueError):
        StateVector([1, 1])
    with pytest.raises(DimensionMismatchError):
        StateVector([1, 0, 0])


@given(angles)
def test_expxy_on_01(theta):
    out = apply(Gate("ExpXY", theta), basis_state("01")).amplitudes
    np.testing.assert_allclose(out, [0, math.cos(theta), math.sin(theta), 0], atol=1e-12)


@given(angles)
def test_expxy_on_00(theta):
    out = apply(Gate("ExpXY", theta), basis_state("00")).amplitudes
    np.testing.assert_allclose(out, [math.cos(theta), 0, 0, -math.sin(theta)], atol=1e-12)


def test_expxy_matches_matrix_exponential():
    # exp(i t XY) = cos t I + i sin t XY since (XY)^2 = I
    X = np.array([[0, 1], [1, 0]])
    Y = np.array([[0, -1j], [1j, 0]])
    XY = np.kron(X, Y)
    for t in (0.0, 0.3, -1.2, 2.5):
        expected = math.cos(t) * np.eye(4) + 1j * math.sin(t) * XY
        np.testing.assert_allclose(gate_matrix(Gate("ExpXY", t), 2), expected, atol=1e-14)


def test_expxy_zero_is_identity(rng):
    s = random_state(rng, 2)
    np.testing.assert_allclose(apply(Gate("ExpXY", 0.0), s).amplitudes, s.amplitudes, atol=1e-15)


@given(angles, angles)
def test_expxy_composition(t1, t2):
    for ref in ("01", "00"):
        s = basis_state(ref)
        two = apply(Gate("ExpXY", t1), apply(Gate("ExpXY", t2), s))
        one = apply(Gate("ExpXY", t1 + t2), s)
        np.testing.assert_allclose(two.amplitudes, one.amplitudes, atol=1e-12)


def _gates(theta):
    yield from (Gate(k, qubit=q) for k in "XYZH" for q in (1, 2))
    yield from (Gate(k, theta, qubit=q) for k in ("Rx", "Ry", "Rz") for q in (1, 2))
    yield Gate("CNOT", control=1, target=2)
    yield Gate("CNOT", control=2, target=1)
    yield Gate("ExpXY", theta)


@settings(max_examples=30)
@given(angles, st.integers(0, 2**32 - 1))
def test_norm_preserved(theta, seed):
    s = random_state(np.random.default_rng(seed), 2)
    for g in _gates(theta):
        m = gate_matrix(g, 2)
        assert np.max(np.abs(m.conj().T @ m - np.eye(4))) < 1e-12
        assert abs(np.linalg.norm(m @ s.amplitudes) - 1) < 1e-12


def test_cnot_truth_table():
    for label, out in {"00": "00", "01": "01", "10": "11", "11": "10"}.items():
        got = apply(Gate("CNOT", control=1, target=2), basis_state(label))
        np.testing.assert_array_equal(got.amplitudes, basis_state(out).amplitudes)
    got = apply(Gate("CNOT", control=2, target=1), basis_state("01"))
    np.testing.assert_array_equal(got.amplitudes, basis_state("11").amplitudes)


def test_arity_mismatch():
    with pytest.raises(DimensionMismatchError):
        apply(Gate("ExpXY", 0.1), basis_state("0"))
    with pytest.raises(DimensionMismatchError):
        apply(Gate("H", qubit=2), basis_state("0"))


def test_gate_validation():
    with pytest.raises(ValueError):
        Gate("Rx")
    with pytest.raises(ValueError):
        Gate("H", 0.3)
    with pytest.raises(ValueError):
        Gate("CNOT", control=1, target=1)
    with pytest.raises(ValueError):
        Gate("SWAP")


def test_expectation_examples():
    assert expectation("ZZ", basis_state("01")) == -1.0
    bell = StateVector([0, 1, 1, 0], normalize=True)
    assert expectation("XX", bell) == pytest.approx(1.0, abs=1e-15)
    row = row_at(0.70)
    a0, a1, a2, a3, _ = row.coefficients
    s = apply(Gate("ExpXY", 0.0), basis_state("01"))
    assert expectation(hamiltonian_2q(row), s) == pytest.approx(a0 + a1 - a2 - a3, abs=1e-15)


def test_expectation_is_quadratic_form(rng):
    h = PauliSum([(0.3, "XY"), (-0.2, "YZ"), (1.1, "ZZ"), (0.5, "IX")])
    m = matrix_of_sum(h)
    for _ in range(100):
        s = random_state(rng, 2)
        psi = s.amplitudes
        assert expectation(h, s) == pytest.approx(np.vdot(psi, m @ psi).real, abs=1e-12)


def test_pauli_expectation_bounded(rng):
    for _ in range(100):
        s = random_state(rng, 2)
        for p in ("XX", "YZ", "ZI", "XY"):
            assert -1 - 1e-12 <= expectation(p, s) <= 1 + 1e-12


def test_expectation_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        expectation("Z", basis_state("01"))
