import math

import numpy as np
import pytest

from h2vqe.molecule import CoefficientRow, default_table


@pytest.fixture(scope="session")
def table():
    return default_table()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def row_at(R):
    return default_table().row(R)


def closed_form_2x2(d1, d2, c):
    """Eigenvalues of [[d1, c], [c, d2]] from the quadratic formula."""
    mean, half = (d1 + d2) / 2, (d1 - d2) / 2
    r = math.sqrt(half * half + c * c)
    return mean - r, mean + r


def block_levels(row: CoefficientRow):
    """Closed-form (A0, A1, B0, B1) from the hand-expanded blocks."""
    a0, a1, a2, a3, a4 = row.coefficients
    a = closed_form_2x2(a0 + a1 - a2 - a3, a0 - a1 + a2 - a3, a4)
    b = closed_form_2x2(a0 + a1 + a2 + a3, a0 - a1 - a2 + a3, a4)
    return {"A": a, "B": b}


def random_state(rng, n_qubits):
    from h2vqe.statevector import StateVector

    v = rng.normal(size=2**n_qubits) + 1j * rng.normal(size=2**n_qubits)
    return StateVector(v, normalize=True)


# (criterion number, title, passed, detail) rows filled by test_acceptance.py
ACCEPTANCE: list[tuple[int, str, bool, str]] = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n, title, ok, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] C{n:<2} {title}: {detail}")
