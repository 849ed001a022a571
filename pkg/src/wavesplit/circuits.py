"""Gate-level circuits for spectral damped-wave evolution.

Gate vocabulary is deliberately small: RY, RZ, P, X plus their
controlled forms CNOT, CRY, CP.  Cost accounting is in CNOT
equivalents, with each controlled rotation worth two CNOTs (the
standard two-CNOT decomposition) and plain rotations worth zero.

The wave evolution circuit realizes, on one dimension's data register
plus the shared selector qubit, the block-diagonal rotation

    sum_j |j><j| (x) RY(-2 w_j t)

where w_j is the wraparound mode frequency: proportional to j below
the Nyquist index and to 2**n - j above it.  A binary ladder of
controlled RY gates handles the linear-in-j part; conjugating the
ladder by CNOTs from the top data qubit flips the rotation sign on
the upper half (X RY(t) X == RY(-t)), and one final controlled RY
adds the 2**n offset there.

Damping uses one ancilla: a CRY from the selector rotates the ancilla
by 2*arccos(exp(-g)), so postselecting the ancilla on |0> multiplies
every selector-|1> amplitude by exp(-g).  The imaginary part of a
complex damping coefficient needs only a phase gate on the selector.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .statevector import Gate2x2, StateVector, apply_1q, apply_controlled

GATE_KINDS = ("RY", "RZ", "P", "X", "CNOT", "CRY", "CP")
_NEEDS_ANGLE = {"RY", "RZ", "P", "CRY", "CP"}
_NEEDS_CONTROL = {"CNOT", "CRY", "CP"}
CNOT_COST = {"RY": 0, "RZ": 0, "P": 0, "X": 0, "CNOT": 1, "CRY": 2, "CP": 2}

_MATRIX_QUBIT_CAP = 12


@dataclass(frozen=True)
class GateOp:
    kind: str
    target: int
    control: int | None = None
    angle: float | None = None


@dataclass(frozen=True)
class RegisterLayout:
    """Qubit indices for the data registers, selector and ancilla."""

    data: tuple[tuple[int, ...], ...]
    selector: int
    ancilla: int

    @classmethod
    def standard(cls, n: int, d: int = 1) -> "RegisterLayout":
        data = tuple(tuple(range(k * n, (k + 1) * n)) for k in range(d))
        return cls(data, n * d, n * d + 1)

    @property
    def n_qubits(self) -> int:
        return len(self.data) * len(self.data[0]) + 2

    def __post_init__(self):
        flat = [q for reg in self.data for q in reg] + [self.selector, self.ancilla]
        if len(set(flat)) != len(flat):
            raise ValueError("register layout assigns one qubit to two roles")
        if self.data and len({len(reg) for reg in self.data}) != 1:
            raise ValueError("data registers must share one width")


@dataclass(frozen=True)
class Circuit:
    n_qubits: int
    ops: tuple[GateOp, ...]
    layout: RegisterLayout | None = None

    def __post_init__(self):
        object.__setattr__(self, "ops", tuple(self.ops))
        for op in self.ops:
            if op.kind not in GATE_KINDS:
                raise ValueError(f"unknown gate kind {op.kind!r}")
            if not 0 <= op.target < self.n_qubits:
                raise ValueError(f"target {op.target} out of range")
            if op.kind in _NEEDS_CONTROL:
                if op.control is None or not 0 <= op.control < self.n_qubits:
                    raise ValueError(f"{op.kind} needs an in-range control qubit")
                if op.control == op.target:
                    raise ValueError("control equals target")
            elif op.control is not None:
                raise ValueError(f"{op.kind} takes no control qubit")
            if op.kind in _NEEDS_ANGLE and (op.angle is None or not math.isfinite(op.angle)):
                raise ValueError(f"{op.kind} needs a finite angle")


@dataclass(frozen=True)
class ModeSystem:
    """Periodic damped-wave discretization: n qubits per spatial dimension.

    Mode j of one axis carries angular frequency (2 pi c / L) * j below
    the Nyquist index and (2 pi c / L) * (2**n - j) at or above it.  In
    d dimensions the per-mode frequency is the sum over the axes, which
    is exactly the dynamics the per-dimension circuits compose to.
    """

    n: int
    d: int = 1
    c: float = 1.0
    L: float = 1.0
    gamma: float = 0.0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("need at least one data qubit per dimension")
        if not 1 <= self.d <= 3:
            raise ValueError("spatial dimensions limited to 1..3")
        if self.c <= 0 or self.L <= 0:
            raise ValueError("wave speed and domain length must be positive")
        if self.gamma < 0:
            raise ValueError("damping rate must be nonnegative")

    @property
    def zeta(self) -> float:
        """Angular-frequency scale 4 pi c / L of the circuit angles."""
        return 4.0 * math.pi * self.c / self.L

    @property
    def n_modes(self) -> int:
        return 2**self.n

    @property
    def n_qubits(self) -> int:
        return self.n * self.d + 2

    def omega(self, j: int) -> float:
        N = self.n_modes
        if not 0 <= j < N:
            raise ValueError(f"mode index {j} out of range")
        wrap = j if j < N // 2 else N - j
        return 2.0 * math.pi * self.c / self.L * wrap

    def omegas(self) -> np.ndarray:
        idx = np.arange(self.n_modes)
        wrap = np.where(idx < self.n_modes // 2, idx, self.n_modes - idx)
        return 2.0 * math.pi * self.c / self.L * wrap.astype(float)

    def mode_frequencies(self) -> np.ndarray:
        """Per-mode frequency over the flattened d-dimensional index.

        Flattening puts axis 0 in the lowest data qubits, so the flat
        index is j0 + N*j1 + N**2*j2.
        """
        om = self.omegas()
        if self.d == 1:
            return om
        N = self.n_modes
        total = np.zeros((N,) * self.d)
        for k in range(self.d):
            shape = [1] * self.d
            shape[k] = N
            total = total + om.reshape(shape)
        return total.ravel(order="F")

    def layout(self) -> RegisterLayout:
        return RegisterLayout.standard(self.n, self.d)


def qft_circuit(n: int) -> Circuit:
    """Fourier transform on n qubits, including the final qubit reversal.

    The dense matrix is F[j, k] = exp(2 pi i j k / 2**n) / 2**(n/2).
    Hadamards are emitted as the pair RY(pi/2) then X, which keeps the
    gate vocabulary closed and costs no CNOTs.
    """
    if n < 1:
        raise ValueError("need at least one qubit")
    ops: list[GateOp] = []
    for i in range(n - 1, -1, -1):
        ops.append(GateOp("RY", i, angle=math.pi / 2))
        ops.append(GateOp("X", i))
        for j in range(i - 1, -1, -1):
            ops.append(GateOp("CP", target=i, control=j,
                              angle=2.0 * math.pi / 2 ** (i - j + 1)))
    for r in range(n // 2):
        a, b = r, n - 1 - r
        ops.append(GateOp("CNOT", target=b, control=a))
        ops.append(GateOp("CNOT", target=a, control=b))
        ops.append(GateOp("CNOT", target=b, control=a))
    return Circuit(n, tuple(ops))


def wave_evolution_circuit(sys: ModeSystem, tau: float, dim: int = 0,
                           layout: RegisterLayout | None = None) -> Circuit:
    """Spectral wave evolution over dimensionless time tau = zeta * t.

    Exact in time: composing k circuits built with tau/k equals the
    single circuit built with tau.  Uses 2n + 4 CNOT equivalents.
    """
    if not math.isfinite(tau):
        raise ValueError("tau must be finite")
    if not 0 <= dim < sys.d:
        raise ValueError(f"dimension {dim} out of range for d={sys.d}")
    if layout is None:
        layout = sys.layout()
    data = layout.data[dim]
    sel = layout.selector
    top = data[-1]
    ops = [GateOp("CNOT", target=sel, control=top)]
    for r, q in enumerate(data):
        ops.append(GateOp("CRY", target=sel, control=q, angle=-(2.0**r) * tau))
    ops.append(GateOp("CNOT", target=sel, control=top))
    ops.append(GateOp("CRY", target=sel, control=top, angle=-(2.0 ** len(data)) * tau))
    return Circuit(layout.n_qubits, tuple(ops), layout)


def damping_real_circuit(gamma_dt: float, layout: RegisterLayout) -> Circuit:
    """Contraction exp(-gamma_dt) of selector-|1> amplitudes, via the ancilla.

    The circuit alone is unitary; the contraction appears after
    postselecting the ancilla on |0>.  Requires gamma_dt >= 0.
    """
    if not math.isfinite(gamma_dt) or gamma_dt < 0:
        raise ValueError("dissipative stage needs a nonnegative finite argument")
    angle = 2.0 * math.acos(math.exp(-gamma_dt))
    op = GateOp("CRY", target=layout.ancilla, control=layout.selector, angle=angle)
    return Circuit(layout.n_qubits, (op,), layout)


def damping_phase_gate(gamma_im_dt: float, layout: RegisterLayout) -> Circuit:
    """Phase rotation exp(-i * gamma_im_dt) of selector-|1> amplitudes.

    Emitted as a plain P gate on the selector (no global-phase
    substitution), so it costs zero CNOT equivalents.
    """
    if not math.isfinite(gamma_im_dt):
        raise ValueError("phase stage needs a finite argument")
    op = GateOp("P", target=layout.selector, angle=-gamma_im_dt)
    return Circuit(layout.n_qubits, (op,), layout)


def _op_gate(op: GateOp) -> Gate2x2:
    if op.kind in ("RY", "CRY"):
        return Gate2x2.ry(op.angle)
    if op.kind == "RZ":
        return Gate2x2.rz(op.angle)
    if op.kind in ("P", "CP"):
        return Gate2x2.p(op.angle)
    return Gate2x2.x()


def apply_circuit(state: StateVector, circuit: Circuit) -> StateVector:
    if state.n_qubits != circuit.n_qubits:
        raise ValueError("state and circuit disagree on qubit count")
    for op in circuit.ops:
        gate = _op_gate(op)
        if op.control is None:
            state = apply_1q(state, gate, op.target)
        else:
            state = apply_controlled(state, gate, op.control, op.target)
    return state


_I2 = np.eye(2, dtype=complex)
_P0 = np.array([[1, 0], [0, 0]], dtype=complex)
_P1 = np.array([[0, 0], [0, 1]], dtype=complex)


def _kron_chain(factors) -> np.ndarray:
    m = np.eye(1, dtype=complex)
    for f in factors:
        m = np.kron(m, f)
    return m


def _embed_op(op: GateOp, n: int) -> np.ndarray:
    g = _op_gate(op).matrix
    bits = range(n - 1, -1, -1)  # kron order: highest qubit first
    if op.control is None:
        return _kron_chain(g if b == op.target else _I2 for b in bits)
    idle = _kron_chain(_P0 if b == op.control else _I2 for b in bits)
    act = _kron_chain(_P1 if b == op.control else (g if b == op.target else _I2)
                      for b in bits)
    return idle + act


def circuit_to_matrix(circuit: Circuit) -> np.ndarray:
    """Dense matrix of the circuit, ops multiplied in application order."""
    if circuit.n_qubits > _MATRIX_QUBIT_CAP:
        raise ValueError(f"dense form capped at {_MATRIX_QUBIT_CAP} qubits")
    u = np.eye(2**circuit.n_qubits, dtype=complex)
    for op in circuit.ops:
        u = _embed_op(op, circuit.n_qubits) @ u
    return u


def cnot_count(circuit: Circuit) -> int:
    return sum(CNOT_COST[op.kind] for op in circuit.ops)


def circuit_dump(circuit: Circuit) -> str:
    """One op per line: ``KIND angle control target``, '-' for absent."""
    lines = []
    for op in circuit.ops:
        angle = "-" if op.angle is None else repr(op.angle)
        control = "-" if op.control is None else str(op.control)
        lines.append(f"{op.kind} {angle} {control} {op.target}")
    return "\n".join(lines)
