"""H2 coefficient table and the qubit Hamiltonians built from it.

The bundled table holds the parity-mapped STO-3G coefficients a0..a4 of
``a0 II + a1 ZI + a2 IZ + a3 ZZ + a4 XX`` at sixteen internuclear distances.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from importlib import resources
from typing import IO, Iterable, Iterator

from .pauli import PauliSum

COLUMNS = ("R", "a0", "a1", "a2", "a3", "a4")
DEFAULT_TABLE = "h2_sto3g_parity_v1.csv"
GRID_TOLERANCE = 1e-9


class TableError(ValueError):
    """Malformed coefficient data; ``line`` is the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class OffGridError(KeyError):
    def __init__(self, R: float, neighbours: tuple[float, ...]):
        self.R = R
        self.neighbours = neighbours
        near = ", ".join(f"{x:.2f}" for x in neighbours)
        super().__init__(f"R={R:g} is not a tabulated distance; nearest grid values: {near}")

    def __str__(self) -> str:
        return self.args[0]


@dataclass(frozen=True)
class CoefficientRow:
    R: float
    a0: float
    a1: float
    a2: float
    a3: float
    a4: float
    # decimal text as read, used to write the row back unchanged
    text: tuple[str, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        for name in COLUMNS:
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite")
        if self.R <= 0:
            raise ValueError(f"R must be positive, got {self.R}")

    @property
    def coefficients(self) -> tuple[float, float, float, float, float]:
        return (self.a0, self.a1, self.a2, self.a3, self.a4)

    def cells(self) -> tuple[str, ...]:
        if self.text is not None:
            return self.text
        return tuple(repr(float(getattr(self, c))) for c in COLUMNS)


class CoefficientTable:
    """Rows sorted by strictly increasing R."""

    def __init__(self, rows: Iterable[CoefficientRow]):
        rows = sorted(rows, key=lambda r: r.R)
        for prev, cur in zip(rows, rows[1:]):
            if cur.R == prev.R:
                raise TableError(f"duplicate R={cur.R:g}")
        self._rows = tuple(rows)

    @property
    def rows(self) -> tuple[CoefficientRow, ...]:
        return self._rows

    @property
    def distances(self) -> tuple[float, ...]:
        return tuple(r.R for r in self._rows)

    def __len__(self) -> int:
        return len(self._rows)

    def __iter__(self) -> Iterator[CoefficientRow]:
        return iter(self._rows)

    def __getitem__(self, i: int) -> CoefficientRow:
        return self._rows[i]

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoefficientTable):
            return NotImplemented
        return self._rows == other._rows

    def row(self, R: float) -> CoefficientRow:
        """Exact grid lookup; no interpolation between tabulated distances."""
        for r in self._rows:
            if abs(r.R - R) <= GRID_TOLERANCE:
                return r
        if not self._rows:
            raise TableError("table is empty")
        below = [r.R for r in self._rows if r.R < R]
        above = [r.R for r in self._rows if r.R > R]
        neighbours = tuple(x for x in (max(below, default=None), min(above, default=None)) if x is not None)
        raise OffGridError(R, neighbours)


def load_table(source: IO[str] | str) -> CoefficientTable:
    """Parse ``R,a0,a1,a2,a3,a4`` CSV text from a stream or string."""
    text = source if isinstance(source, str) else source.read()
    reader = csv.reader(io.StringIO(text))
    header = None
    rows = []
    seen: dict[float, int] = {}
    for record in reader:
        line = reader.line_num
        if not record or all(not c.strip() for c in record):
            continue
        cells = [c.strip().replace("−", "-") for c in record]
        if header is None:
            header = cells
            missing = [c for c in COLUMNS if c not in header]
            if missing:
                raise TableError(f"header lacks column(s) {', '.join(missing)}", line)
            idx = [header.index(c) for c in COLUMNS]
            continue
        if len(cells) != len(header):
            raise TableError(f"expected {len(header)} cells, found {len(cells)}", line)
        picked = tuple(cells[i] for i in idx)
        try:
            values = [float(c) for c in picked]
        except ValueError:
            bad = next(c for c in picked if not _is_number(c))
            raise TableError(f"non-numeric cell {bad!r}", line) from None
        if not all(math.isfinite(v) for v in values):
            raise TableError("non-finite value", line)
        if values[0] in seen:
            raise TableError(f"duplicate R={picked[0]} (first seen on line {seen[values[0]]})", line)
        seen[values[0]] = line
        try:
            rows.append(CoefficientRow(*values, text=picked))
        except ValueError as exc:
            raise TableError(str(exc), line) from None
    if header is None:
        raise TableError("empty coefficient table")
    if not rows:
        raise TableError("coefficient table has a header but no rows")
    return CoefficientTable(rows)


def _is_number(s: str) -> bool:
    try:
        float(s)
    except ValueError:
        return False
    return True


def dump_table(table: CoefficientTable) -> str:
    lines = [",".join(COLUMNS)]
    lines += [",".join(r.cells()) for r in table]
    return "\n".join(lines) + "\n"


def default_table_text() -> str:
    return resources.files(__package__).joinpath("data", DEFAULT_TABLE).read_text(encoding="utf-8")


def default_table() -> CoefficientTable:
    return load_table(default_table_text())


def hamiltonian_2q(row: CoefficientRow) -> PauliSum:
    """``a0 II + a1 ZI + a2 IZ + a3 ZZ + a4 XX``."""
    a0, a1, a2, a3, a4 = row.coefficients
    return PauliSum([(a0, "II"), (a1, "ZI"), (a2, "IZ"), (a3, "ZZ"), (a4, "XX")], n_qubits=2)


def hamiltonian_1q_A(row: CoefficientRow) -> PauliSum:
    """Single-qubit image of the {|01>, |10>} block: ``(a0-a3) I + (a1-a2) Z + a4 X``."""
    a0, a1, a2, a3, a4 = row.coefficients
    return PauliSum([(a0 - a3, "I"), (a1 - a2, "Z"), (a4, "X")], n_qubits=1)


def hamiltonian_1q_B(row: CoefficientRow) -> PauliSum:
    """Single-qubit image of the {|00>, |11>} block: ``(a0+a3) I + (a1+a2) Z + a4 X``."""
    a0, a1, a2, a3, a4 = row.coefficients
    return PauliSum([(a0 + a3, "I"), (a1 + a2, "Z"), (a4, "X")], n_qubits=1)
