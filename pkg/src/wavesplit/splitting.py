"""Splitting steps: stage plans, emulated runs, dense reference products.

A step interleaves dissipative and unitary stages, dissipative first:

    for each b[i]:   DampReal(a[i]), DampPhase(a[i]), Postselect,
                     then one WaveStage per spatial dimension
    then, when len(a) == len(b) + 1, a closing dissipative group.

Complex dissipative coefficients factor exactly into a real contraction
and a phase, exp(D a dt) == exp(D Re(a) dt) exp(i D Im(a) dt), because
the dissipative generator is diagonal.  Phase stages with
|Im(a)| < 1e-15 are omitted.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np

from .circuits import (Circuit, ModeSystem, RegisterLayout, apply_circuit,
                       cnot_count, damping_phase_gate, damping_real_circuit,
                       wave_evolution_circuit)
from .reference import dense_expm
from .schemes import SplittingScheme
from .statevector import StateVector, postselect

_IM_OMIT_TOL = 1e-15
_HERM_TOL = 1e-12


@dataclass(frozen=True)
class WaveStage:
    dim: int
    coeff_dt: float  # b[i] * dt
    circuit: Circuit


@dataclass(frozen=True)
class DampRealStage:
    gamma_dt: float  # gamma * Re(a[i]) * dt
    circuit: Circuit


@dataclass(frozen=True)
class DampPhaseStage:
    gamma_im_dt: float  # gamma * Im(a[i]) * dt
    circuit: Circuit


@dataclass(frozen=True)
class PostselectStage:
    pass


POSTSELECT = PostselectStage()


@dataclass(frozen=True)
class SplitStepPlan:
    scheme: SplittingScheme
    sys: ModeSystem
    dt: float
    stages: tuple
    layout: RegisterLayout

    @property
    def n_qubits(self) -> int:
        return self.layout.n_qubits

    @property
    def cnot_per_step(self) -> int:
        return sum(cnot_count(st.circuit) for st in self.stages
                   if not isinstance(st, PostselectStage))

    def stage_counts(self) -> dict[str, int]:
        counts = {"wave": 0, "damp_real": 0, "damp_phase": 0, "postselect": 0}
        for st in self.stages:
            if isinstance(st, WaveStage):
                counts["wave"] += 1
            elif isinstance(st, DampRealStage):
                counts["damp_real"] += 1
            elif isinstance(st, DampPhaseStage):
                counts["damp_phase"] += 1
            else:
                counts["postselect"] += 1
        return counts


@dataclass
class RunReport:
    """Summary of one emulated trajectory."""

    scheme: str
    n: int
    d: int
    T: int
    dt: float
    success_prob: float
    cnot_per_step: int
    cnot_total: int
    qubits: int
    wall_time: float
    magnitude: float
    epsilon: float | None = None
    state: StateVector | None = field(default=None, repr=False)


def build_step(scheme: SplittingScheme, sys: ModeSystem, dt: float) -> SplitStepPlan:
    """Lay out one splitting step of size dt as an ordered stage tuple."""
    if not dt > 0:
        raise ValueError("step size must be positive")
    a, b = scheme.a, scheme.b
    if not (len(a) == len(b) + 1 or len(a) == len(b) == 1):
        raise ValueError(f"scheme {scheme.name!r} has unsupported stage counts")
    layout = sys.layout()
    stages: list = []

    def dissipative(ai: complex) -> None:
        stages.append(DampRealStage(sys.gamma * ai.real * dt,
                                    damping_real_circuit(sys.gamma * ai.real * dt, layout)))
        if abs(ai.imag) >= _IM_OMIT_TOL:
            stages.append(DampPhaseStage(sys.gamma * ai.imag * dt,
                                         damping_phase_gate(sys.gamma * ai.imag * dt, layout)))
        stages.append(POSTSELECT)

    for i, bi in enumerate(b):
        dissipative(complex(a[i]))
        for dim in range(sys.d):
            stages.append(WaveStage(dim, bi * dt,
                                    wave_evolution_circuit(sys, sys.zeta * bi * dt, dim, layout)))
    if len(a) == len(b) + 1:
        dissipative(complex(a[-1]))
    return SplitStepPlan(scheme, sys, dt, tuple(stages), layout)


def simulate(plan: SplitStepPlan, T: int, initial: StateVector) -> RunReport:
    """Run T splitting steps, postselecting the ancilla after each
    dissipative stage.  ``epsilon`` is left unset; comparison against a
    reference is the harness's job.
    """
    if T < 1:
        raise ValueError("need at least one step")
    if initial.n_qubits != plan.n_qubits:
        raise ValueError("initial state size does not match the plan")
    anc = plan.layout.ancilla
    tail = initial.amp.reshape((2,) * initial.n_qubits)
    tail = np.take(tail, 1, axis=initial.n_qubits - 1 - anc)
    if float(np.sum(np.abs(tail) ** 2)) > 1e-12:
        raise ValueError("ancilla must start in |0>")

    t0 = time.perf_counter()
    state = initial
    success = 1.0
    for _ in range(T):
        for stage in plan.stages:
            if isinstance(stage, PostselectStage):
                p, state = postselect(state, anc, 0)
                success *= p
            else:
                state = apply_circuit(state, stage.circuit)
    wall = time.perf_counter() - t0
    per_step = plan.cnot_per_step
    return RunReport(
        scheme=plan.scheme.name,
        n=plan.sys.n,
        d=plan.sys.d,
        T=T,
        dt=plan.dt,
        success_prob=success,
        cnot_per_step=per_step,
        cnot_total=per_step * T,
        qubits=plan.n_qubits,
        wall_time=wall,
        magnitude=state.magnitude,
        state=state,
    )


def _check_hermitian(m: np.ndarray, label: str) -> None:
    scale = max(1.0, float(np.max(np.abs(m))))
    if float(np.max(np.abs(m - m.conj().T))) > _HERM_TOL * scale:
        raise ValueError(f"{label} must be Hermitian")


def generic_split_matrix(scheme: SplittingScheme, h1, h2, t: float, T: int) -> np.ndarray:
    """Dense splitting product for exp((H1 + i H2) t) over T steps.

    Stage order mirrors ``build_step``: dissipative exp(H1 a[i] dt)
    first, then unitary exp(i H2 b[i] dt), with the closing dissipative
    factor when the scheme carries one.
    """
    a1 = np.asarray(h1, dtype=complex)
    a2 = np.asarray(h2, dtype=complex)
    if a1.shape != a2.shape or a1.ndim != 2 or a1.shape[0] != a1.shape[1]:
        raise ValueError("H1 and H2 must be square matrices of one shape")
    if a1.shape[0] > 64:
        raise ValueError("dense splitting capped at dimension 64")
    _check_hermitian(a1, "H1")
    _check_hermitian(a2, "H2")
    if T < 1:
        raise ValueError("need at least one step")
    dt = t / T
    step = np.eye(a1.shape[0], dtype=complex)
    for i, bi in enumerate(scheme.b):
        step = dense_expm(complex(scheme.a[i]) * a1, dt) @ step
        step = dense_expm(1j * bi * a2, dt) @ step
    if len(scheme.a) == len(scheme.b) + 1:
        step = dense_expm(complex(scheme.a[-1]) * a1, dt) @ step
    return np.linalg.matrix_power(step, T)
