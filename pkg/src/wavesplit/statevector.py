"""Dense little-endian statevector with postselection bookkeeping.

Qubit r addresses bit r of the basis-state integer, so index
j = sum_r 2**r q_r and qubit 0 is the least significant bit.  Working
amplitudes stay unit norm; ``magnitude`` accumulates the square root of
every postselection probability, so magnitude**2 is the cumulative
success probability of the trajectory and also the squared norm of the
unnormalized evolution of a unit initial state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np


class DegeneratePostselectionError(ValueError):
    """Postselection outcome has (numerically) zero probability."""


@dataclass(frozen=True)
class Gate2x2:
    """Single-qubit gate as a 2x2 unitary."""

    matrix: np.ndarray = field(repr=False)
    name: str = "U"

    @classmethod
    def ry(cls, theta: float) -> "Gate2x2":
        c, s = math.cos(theta / 2), math.sin(theta / 2)
        return cls(np.array([[c, -s], [s, c]], dtype=complex), "RY")

    @classmethod
    def rz(cls, theta: float) -> "Gate2x2":
        e = np.exp(-0.5j * theta)
        return cls(np.array([[e, 0], [0, e.conjugate()]], dtype=complex), "RZ")

    @classmethod
    def p(cls, theta: float) -> "Gate2x2":
        return cls(np.array([[1, 0], [0, np.exp(1j * theta)]], dtype=complex), "P")

    @classmethod
    def x(cls) -> "Gate2x2":
        return cls(np.array([[0, 1], [1, 0]], dtype=complex), "X")


@dataclass
class StateVector:
    n_qubits: int
    amp: np.ndarray = field(repr=False)
    magnitude: float = 1.0

    @classmethod
    def basis(cls, n_qubits: int, index: int = 0) -> "StateVector":
        if not 0 <= index < 2**n_qubits:
            raise ValueError(f"basis index {index} out of range for {n_qubits} qubits")
        amp = np.zeros(2**n_qubits, dtype=complex)
        amp[index] = 1.0
        return cls(n_qubits, amp)

    @classmethod
    def from_amplitudes(cls, amps, magnitude: float = 1.0) -> "StateVector":
        """Build from arbitrary amplitudes, normalizing to unit norm."""
        amp = np.asarray(amps, dtype=complex).reshape(-1)
        n = int(amp.size).bit_length() - 1
        if 2**n != amp.size:
            raise ValueError(f"amplitude count {amp.size} is not a power of two")
        nrm = float(np.linalg.norm(amp))
        if nrm == 0.0:
            raise ValueError("cannot normalize a zero state")
        return cls(n, amp / nrm, magnitude)

    def norm(self) -> float:
        return float(np.linalg.norm(self.amp))


def _axis(n_qubits: int, qubit: int) -> int:
    # C-order reshape puts qubit n-1 on axis 0
    return n_qubits - 1 - qubit


def _check_qubit(state: StateVector, qubit: int, role: str) -> None:
    if not 0 <= qubit < state.n_qubits:
        raise ValueError(f"{role} qubit {qubit} out of range for {state.n_qubits} qubits")


def apply_1q(state: StateVector, gate: Gate2x2, target: int) -> StateVector:
    """Apply a single-qubit gate, returning a new state."""
    _check_qubit(state, target, "target")
    n = state.n_qubits
    ax = _axis(n, target)
    psi = np.moveaxis(state.amp.reshape((2,) * n), ax, 0)
    psi = np.tensordot(gate.matrix, psi, axes=(1, 0))
    psi = np.moveaxis(psi, 0, ax)
    return StateVector(n, np.ascontiguousarray(psi).reshape(-1), state.magnitude)


def apply_controlled(state: StateVector, gate: Gate2x2, control: int, target: int) -> StateVector:
    """Apply ``gate`` to ``target`` on the control == 1 subspace."""
    _check_qubit(state, control, "control")
    _check_qubit(state, target, "target")
    if control == target:
        raise ValueError("control and target must be distinct qubits")
    n = state.n_qubits
    c_ax, t_ax = _axis(n, control), _axis(n, target)
    psi = state.amp.reshape((2,) * n).copy()
    sel: list = [slice(None)] * n
    sel[c_ax] = 1
    sub = psi[tuple(sel)]
    t_sub = t_ax - 1 if c_ax < t_ax else t_ax
    moved = np.moveaxis(sub, t_sub, 0)
    moved[...] = np.tensordot(gate.matrix, moved, axes=(1, 0))
    return StateVector(n, psi.reshape(-1), state.magnitude)


def postselect(state: StateVector, qubit: int, outcome: int) -> tuple[float, StateVector]:
    """Project onto ``qubit == outcome`` and renormalize.

    Returns the outcome probability p and the projected state; the new
    state's magnitude is the old one scaled by sqrt(p).
    """
    _check_qubit(state, qubit, "measured")
    if outcome not in (0, 1):
        raise ValueError(f"outcome must be 0 or 1, got {outcome}")
    n = state.n_qubits
    ax = _axis(n, qubit)
    psi = state.amp.reshape((2,) * n)
    kept = np.take(psi, outcome, axis=ax)
    p = float(np.sum(np.abs(kept) ** 2))
    if p < 1e-300:
        raise DegeneratePostselectionError(
            f"outcome {outcome} on qubit {qubit} has probability {p:.3e}")
    p = min(p, 1.0)
    out = np.zeros_like(psi)
    sel: list = [slice(None)] * n
    sel[ax] = outcome
    out[tuple(sel)] = kept / math.sqrt(p)
    return p, StateVector(n, out.reshape(-1), state.magnitude * math.sqrt(p))


def fidelity_error(state: StateVector, reference) -> float:
    """L2 distance between the working amplitudes and a reference vector.

    The reference is expected to be pre-scaled to unit norm by the caller.
    """
    ref = np.asarray(reference, dtype=complex).reshape(-1)
    if ref.size != state.amp.size:
        raise ValueError(f"reference length {ref.size} != state length {state.amp.size}")
    return float(np.linalg.norm(state.amp - ref))
