"""Three-qubit gates and the rotation-plus-CNOT preparation circuit."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Union

import numpy as np

from .qcore import ATOL_GATE, InvalidStateError, PureState3, QubitLabel

# Bit weight of each qubit inside the 8-entry amplitude vector.
_WEIGHT = {QubitLabel.A: 4, QubitLabel.B: 2, QubitLabel.C: 1}


def ry_matrix(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return np.array([[c, -s], [s, c]], dtype=complex)


@dataclass(frozen=True)
class Ry:
    target: QubitLabel
    angle: float

    def __post_init__(self):
        if not math.isfinite(self.angle):
            raise ValueError(f"rotation angle must be finite, got {self.angle}")


@dataclass(frozen=True)
class CNOT:
    control: QubitLabel
    target: QubitLabel

    def __post_init__(self):
        if self.control == self.target:
            raise ValueError("CNOT control and target must differ")


Gate = Union[Ry, CNOT]


def _pairs(target: QubitLabel):
    """Index pairs (i0, i1) differing only in the target bit, i0 having it clear."""
    w = _WEIGHT[target]
    return [(i, i | w) for i in range(8) if not i & w]


def apply_gate(state: PureState3, gate: Gate) -> PureState3:
    deviation = abs(state.norm - 1.0)
    if deviation > ATOL_GATE:
        raise InvalidStateError(f"state is not normalized (|norm - 1| = {deviation:.3e})")
    psi = state.amplitudes
    out = psi.copy()
    if isinstance(gate, Ry):
        c, s = math.cos(gate.angle / 2), math.sin(gate.angle / 2)
        for i0, i1 in _pairs(gate.target):
            out[i0] = c * psi[i0] - s * psi[i1]
            out[i1] = s * psi[i0] + c * psi[i1]
    elif isinstance(gate, CNOT):
        cw = _WEIGHT[gate.control]
        for i0, i1 in _pairs(gate.target):
            if i0 & cw:
                out[i0], out[i1] = psi[i1], psi[i0]
    else:
        raise TypeError(f"unsupported gate {gate!r}")
    return PureState3(out)


def run_circuit(gates: Iterable[Gate], state: PureState3 | None = None) -> PureState3:
    """Apply ``gates`` left to right, starting from |000> by default."""
    if state is None:
        state = PureState3.basis("000")
    for gate in gates:
        state = apply_gate(state, gate)
    return state


def theta_circuit(theta1: float, theta2: float, theta3: float) -> tuple[Gate, ...]:
    """Ry on each qubit followed by CNOT(A->B) and CNOT(A->C)."""
    A, B, C = QubitLabel
    return (
        Ry(A, theta1),
        Ry(B, theta2),
        Ry(C, theta3),
        CNOT(A, B),
        CNOT(A, C),
    )


def prepare_theta_state(theta1: float, theta2: float, theta3: float) -> PureState3:
    return run_circuit(theta_circuit(theta1, theta2, theta3))


def theta_state_formula(theta1: float, theta2: float, theta3: float) -> PureState3:
    """Closed-form amplitudes of the prepared state, written out ket by ket."""
    c1, s1 = math.cos(theta1 / 2), math.sin(theta1 / 2)
    c2, s2 = math.cos(theta2 / 2), math.sin(theta2 / 2)
    c3, s3 = math.cos(theta3 / 2), math.sin(theta3 / 2)
    return PureState3.from_symbols(
        a=c1 * c2 * c3,  # |000>
        b=c1 * c2 * s3,  # |001>
        c=c1 * s2 * c3,  # |010>
        d=s1 * s2 * s3,  # |100>
        g=c1 * s2 * s3,  # |011>
        e=s1 * c2 * s3,  # |110>
        f=s1 * s2 * c3,  # |101>
        h=s1 * c2 * c3,  # |111>
    )
