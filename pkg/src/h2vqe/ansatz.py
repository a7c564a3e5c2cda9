"""Single-parameter UCCSD trial states.

Two-qubit families apply ``exp(i theta XY)`` to a reference state:

    |01>  ->  cos(theta)|01> + sin(theta)|10>
    |00>  ->  cos(theta)|00> - sin(theta)|11>

The single-qubit families are their images under ``|01>,|00> -> |0>`` and
``|10>,|11> -> |1>``: ``exp(-i theta Y)|0>`` and ``exp(+i theta Y)|0>``.
With ``Y = [[0, -i], [i, 0]]`` the first is ``cos(theta)|0> + sin(theta)|1>``.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from .statevector import Gate, StateVector, apply, basis_state

# energies are pi-periodic in theta; optimal angles are folded into this interval
THETA_DOMAIN = (-math.pi / 2, math.pi / 2)


class Family(enum.Enum):
    TWO_QUBIT_XY_ON_01 = "TwoQubitXY_on01"
    TWO_QUBIT_XY_ON_00 = "TwoQubitXY_on00"
    ONE_QUBIT_MINUS_Y = "OneQubitMinusY"
    ONE_QUBIT_PLUS_Y = "OneQubitPlusY"

    @property
    def n_qubits(self) -> int:
        return 2 if self in (Family.TWO_QUBIT_XY_ON_01, Family.TWO_QUBIT_XY_ON_00) else 1

    @property
    def block(self) -> str:
        """Which invariant block of the H2 Hamiltonian the family explores."""
        return "A" if self in (Family.TWO_QUBIT_XY_ON_01, Family.ONE_QUBIT_MINUS_Y) else "B"

    @property
    def formulation(self) -> str:
        return "two_qubit" if self.n_qubits == 2 else "one_qubit"

    @property
    def reference(self) -> str:
        return {
            Family.TWO_QUBIT_XY_ON_01: "01",
            Family.TWO_QUBIT_XY_ON_00: "00",
        }.get(self, "0")


def family_for(formulation: str, block: str) -> Family:
    key = (formulation.replace("-", "_"), block.upper())
    table = {
        ("two_qubit", "A"): Family.TWO_QUBIT_XY_ON_01,
        ("two_qubit", "B"): Family.TWO_QUBIT_XY_ON_00,
        ("one_qubit", "A"): Family.ONE_QUBIT_MINUS_Y,
        ("one_qubit", "B"): Family.ONE_QUBIT_PLUS_Y,
    }
    try:
        return table[key]
    except KeyError:
        raise ValueError(f"no ansatz for formulation={formulation!r}, block={block!r}") from None


@dataclass(frozen=True)
class AnsatzSpec:
    family: Family
    theta: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))


def ansatz_gate(family: Family, theta: float) -> Gate:
    if family.n_qubits == 2:
        return Gate("ExpXY", theta)
    # exp(-/+ i theta Y) == Ry(+/- 2 theta)
    sign = 1.0 if family is Family.ONE_QUBIT_MINUS_Y else -1.0
    return Gate("Ry", sign * 2.0 * theta, qubit=1)


def prepare(spec: AnsatzSpec) -> StateVector:
    return apply(ansatz_gate(spec.family, spec.theta), basis_state(spec.family.reference))


def subspace_image(spec: AnsatzSpec | Family) -> tuple[str, str]:
    """Computational basis labels spanned by a two-qubit family."""
    family = spec.family if isinstance(spec, AnsatzSpec) else Family(spec)
    if family is Family.TWO_QUBIT_XY_ON_01:
        return ("01", "10")
    if family is Family.TWO_QUBIT_XY_ON_00:
        return ("00", "11")
    raise ValueError(f"{family.value} is a single-qubit family; subspace image is defined for two-qubit families only")


def fold_theta(theta: float) -> float:
    """Map an angle into [-pi/2, pi/2) using the period-pi symmetry of the energy."""
    lo, hi = THETA_DOMAIN
    folded = (theta - lo) % math.pi + lo
    return folded if folded < hi else lo
