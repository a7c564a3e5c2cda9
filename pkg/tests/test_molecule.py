import io

import numpy as np
import pytest

from h2vqe.eigen import exact_spectrum
from h2vqe.molecule import (
    CoefficientRow,
    OffGridError,
    TableError,
    default_table_text,
    dump_table,
    hamiltonian_1q_A,
    hamiltonian_1q_B,
    hamiltonian_2q,
    load_table,
)
from h2vqe.pauli import matrix_of_sum

from conftest import row_at


def test_bundled_table_shape(table):
    assert len(table) == 16
    assert table.distances[0] == pytest.approx(0.30)
    assert table.distances[-1] == pytest.approx(1.80)
    assert list(table.distances) == sorted(table.distances)
    for row in table:
        assert row.a2 == -row.a1


def test_row_070_values():
    text = "R,a0,a1,a2,a3,a4\n0.70, −1.04391, 0.42045, −0.42045, −0.01150, 0.179005\n"
    (row,) = load_table(io.StringIO(text))
    assert row.coefficients == (-1.04391, 0.42045, -0.42045, -0.01150, 0.179005)
    assert row.R == 0.70
    assert row_at(0.70) == row


def test_column_order_is_by_header():
    row = load_table("a4,a3,a2,a1,a0,R\n5,4,3,2,1,0.5\n")[0]
    assert (row.R, row.a0, row.a4) == (0.5, 1.0, 5.0)


@pytest.mark.parametrize(
    "text, line, fragment",
    [
        ("", None, "empty"),
        ("R,a0,a1,a2,a3\n0.3,1,2,3,4\n", 1, "a4"),
        ("R,a0,a1,a2,a3,a4\n0.3,1,2,3,4,5\n0.4,1,x,3,4,5\n", 3, "non-numeric"),
        ("R,a0,a1,a2,a3,a4\n0.3,1,2,3,4,5\n0.30,1,2,3,4,5\n", 3, "duplicate"),
        ("R,a0,a1,a2,a3,a4\n0.3,1,2,3,4\n", 2, "cells"),
        ("R,a0,a1,a2,a3,a4\n-0.3,1,2,3,4,5\n", 2, "positive"),
        ("R,a0,a1,a2,a3,a4\n", None, "no rows"),
    ],
)
def test_parse_errors(text, line, fragment):
    with pytest.raises(TableError) as exc:
        load_table(io.StringIO(text))
    assert exc.value.line == line
    assert fragment in str(exc.value)


def test_round_trip_is_textually_exact():
    text = default_table_text()
    table = load_table(text)
    assert dump_table(table) == text
    again = load_table(dump_table(table))
    assert again == table
    assert dump_table(again) == text


def test_round_trip_without_source_text():
    row = CoefficientRow(0.5, -1.0, 0.1, -0.1, 0.2, 0.3)
    from h2vqe.molecule import CoefficientTable

    t = CoefficientTable([row])
    assert load_table(dump_table(t)) == t


def test_hamiltonian_2q_terms():
    h = hamiltonian_2q(row_at(0.30))
    assert h.coefficient("II") == -0.75374
    assert len(h) == 5
    assert hamiltonian_2q(row_at(1.80)).coefficient("XX") == 0.24801


def test_zero_rows_prune_to_empty():
    zero = CoefficientRow(1.0, 0, 0, 0, 0, 0)
    assert len(hamiltonian_2q(zero)) == 0
    assert len(hamiltonian_1q_B(zero)) == 0
    np.testing.assert_array_equal(matrix_of_sum(hamiltonian_2q(zero)), np.zeros((4, 4)))


def test_reduced_A_coefficients():
    h = hamiltonian_1q_A(row_at(0.70))
    assert h.coefficient("I") == pytest.approx(-1.03241, abs=1e-12)
    assert h.coefficient("Z") == pytest.approx(0.84090, abs=1e-12)
    assert h.coefficient("X") == 0.179005
    only = hamiltonian_1q_A(CoefficientRow(1.0, -0.7, 0, 0, 0, 0))
    assert [(c, s.labels) for c, s in only] == [(-0.7, "I")]


def test_reduced_B_coefficients():
    h = hamiltonian_1q_B(row_at(1.00))
    assert h.coefficient("I") == pytest.approx(-1.07825, abs=1e-12)
    assert h.coefficient("Z") == 0.0
    assert h.coefficient("X") == 0.19679
    assert hamiltonian_1q_B(row_at(0.30)).coefficient("X") == 0.16081


def test_reduced_spectra_cover_full_spectrum(table):
    for row in table:
        full = exact_spectrum(matrix_of_sum(hamiltonian_2q(row)))
        parts = np.concatenate([
            exact_spectrum(matrix_of_sum(hamiltonian_1q_A(row))),
            exact_spectrum(matrix_of_sum(hamiltonian_1q_B(row))),
        ])
        np.testing.assert_allclose(np.sort(parts), full, atol=1e-10)


def test_off_grid_lookup(table):
    with pytest.raises(OffGridError) as exc:
        table.row(0.75)
    assert exc.value.neighbours == (0.70, 0.80)
    assert "0.70" in str(exc.value) and "0.80" in str(exc.value)
    assert table.row(0.7000000000001).R == 0.70
