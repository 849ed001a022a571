"""Analytic oracles: per-mode propagators, matrix exponentials, encoding.

Spectral convention, fixed to match ``qft_circuit``: the forward
transform is u[j] = sum_k exp(+2 pi i j k / N) phi[k] / sqrt(N), i.e.
numpy's ifft scaled by sqrt(N).  With that convention Parseval holds
with no extra factors and encode/decode round-trips are exact up to
floating point.

Each mode pairs a displacement coefficient u with a scaled velocity
v (the time derivative divided by the mode frequency).  The per-mode
generator is [[0, w], [-w, 0]] plus diag(0, -gamma), whose exponential
has the closed form implemented by ``mode_propagator``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .circuits import ModeSystem
from .statevector import StateVector

_EXPM_DIM_CAP = 64
_CRITICAL_REL_TOL = 1e-12


@dataclass(frozen=True)
class ModePairs:
    """Unnormalized spectral (u, v) coefficients over the flat mode index."""

    u: np.ndarray = field(repr=False)
    v: np.ndarray = field(repr=False)

    def __post_init__(self):
        if self.u.shape != self.v.shape or self.u.ndim != 1:
            raise ValueError("u and v must be 1-d arrays of equal length")

    @property
    def n_modes(self) -> int:
        return self.u.size

    def concat(self) -> np.ndarray:
        return np.concatenate([self.u, self.v])


def _propagator_entries(omega, gamma: float, t: float):
    """Entries of exp(([[0, w], [-w, -gamma]]) * t), vectorized over w."""
    om = np.asarray(omega, dtype=float)
    disc = om * om - 0.25 * gamma * gamma
    thr = _CRITICAL_REL_TOL * gamma * gamma
    under = disc > thr
    over = disc < -thr
    osc = np.sqrt(np.where(under, disc, 1.0))
    dec = np.sqrt(np.where(over, -disc, 1.0))
    c = np.where(under, np.cos(osc * t), np.where(over, np.cosh(dec * t), 1.0))
    s = np.where(under, np.sin(osc * t) / osc,
                 np.where(over, np.sinh(dec * t) / dec, t))
    pref = math.exp(-0.5 * gamma * t)
    m00 = pref * (c + 0.5 * gamma * s)
    m01 = pref * om * s
    m11 = pref * (c - 0.5 * gamma * s)
    return m00, m01, -m01, m11


def mode_propagator(omega: float, gamma: float, t: float) -> np.ndarray:
    """Closed-form 2x2 propagator of one damped mode over time t.

    Switches to the critically damped branch when |omega**2 -
    gamma**2/4| falls below 1e-12 * gamma**2.  gamma == 0 gives a pure
    rotation, omega == 0 gives diag(1, exp(-gamma t)).
    """
    if omega < 0 or gamma < 0:
        raise ValueError("omega and gamma must be nonnegative")
    m00, m01, m10, m11 = _propagator_entries(np.array([omega]), gamma, t)
    return np.array([[m00[0], m01[0]], [m10[0], m11[0]]], dtype=complex)


def dense_expm(m, t: float = 1.0) -> np.ndarray:
    """exp(M t) by scaling and squaring with a truncated Taylor core."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("need a square matrix")
    if a.shape[0] > _EXPM_DIM_CAP:
        raise ValueError(f"dense exponential capped at dimension {_EXPM_DIM_CAP}")
    a = a * t
    nrm = float(np.linalg.norm(a, 1))
    squarings = 0 if nrm <= 0.25 else int(math.ceil(math.log2(nrm / 0.25)))
    a = a / (2.0**squarings)
    out = np.eye(a.shape[0], dtype=complex) + a
    term = a.copy()
    for k in range(2, 40):
        term = term @ a / k
        out = out + term
        if np.max(np.abs(term)) < 1e-20 * max(1.0, np.max(np.abs(out))):
            break
    for _ in range(squarings):
        out = out @ out
    return out


def hermitian_split(m) -> tuple[np.ndarray, np.ndarray]:
    """Split M into Hermitian H1, H2 with H1 + i H2 == M."""
    a = np.asarray(m, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("need a square matrix")
    ah = a.conj().T
    return (a + ah) / 2.0, (a - ah) / 2.0j


def spectral_pairs(phi, dphi_scaled) -> ModePairs:
    """Transform physical fields into spectral (u, v) mode pairs.

    ``dphi_scaled`` is the velocity field already divided by the wave
    operator's magnitude, so its transform is the per-mode scaled
    velocity directly.  A nonzero scaled velocity on the zero-frequency
    mode has no physical preimage and raises.  Multi-dimensional arrays
    are flattened with axis 0 fastest.
    """
    p = np.asarray(phi, dtype=complex)
    w = np.asarray(dphi_scaled, dtype=complex)
    if p.shape != w.shape:
        raise ValueError("fields must share a shape")
    for size in p.shape:
        if size < 2 or size & (size - 1):
            raise ValueError("each axis length must be a power of two, >= 2")
    root = math.sqrt(p.size)
    u = (np.fft.ifftn(p) * root).ravel(order="F")
    v = (np.fft.ifftn(w) * root).ravel(order="F")
    vmax = float(np.max(np.abs(v))) if v.size else 0.0
    if vmax > 0 and abs(v[0]) > 1e-10 * vmax:
        raise ValueError("zero-frequency mode carries velocity; it cannot be "
                         "represented in scaled-velocity form")
    return ModePairs(u, v)


def encode_initial(phi, dphi_scaled) -> StateVector:
    """Encode physical fields as a normalized statevector.

    The data register holds the mode index, the selector separates u
    (|0>) from v (|1>), and one ancilla is appended in |0>.  The
    returned state has magnitude 1; the discarded normalization is the
    norm of ``spectral_pairs(...).concat()``.
    """
    pairs = spectral_pairs(phi, dphi_scaled)
    vec = pairs.concat()
    nrm = float(np.linalg.norm(vec))
    if nrm == 0.0:
        raise ValueError("cannot encode a zero initial state")
    n_data = int(pairs.n_modes).bit_length() - 1
    amp = np.zeros(2 ** (n_data + 2), dtype=complex)
    amp[: 2 * pairs.n_modes] = vec / nrm
    return StateVector(n_data + 2, amp, 1.0)


def decode_state(state: StateVector, shape: tuple[int, ...] | None = None):
    """Inverse of ``encode_initial`` up to the discarded global scale.

    Returns complex (phi, dphi_scaled) arrays; ``shape`` restores a
    multi-dimensional field (axis 0 fastest), default is 1-d.
    """
    n_data = state.n_qubits - 2
    if n_data < 1:
        raise ValueError("state too small to carry a data register")
    n_modes = 2**n_data
    u = state.amp[:n_modes]
    v = state.amp[n_modes: 2 * n_modes]
    if shape is None:
        shape = (n_modes,)
    u = u.reshape(shape, order="F")
    v = v.reshape(shape, order="F")
    root = math.sqrt(u.size)
    return np.fft.fftn(u) / root, np.fft.fftn(v) / root


def exact_solution(sys: ModeSystem, pairs: ModePairs, t: float):
    """Propagate mode pairs analytically to time t.

    Returns (unnormalized, unit) concatenated (u, v) vectors of length
    2 * n_modes, matching the encoded layout without the ancilla.
    """
    freqs = sys.mode_frequencies()
    if freqs.size != pairs.n_modes:
        raise ValueError(f"system has {freqs.size} modes, pairs carry {pairs.n_modes}")
    m00, m01, m10, m11 = _propagator_entries(freqs, sys.gamma, t)
    u = m00 * pairs.u + m01 * pairs.v
    v = m10 * pairs.u + m11 * pairs.v
    full = np.concatenate([u, v])
    nrm = float(np.linalg.norm(full))
    if nrm == 0.0:
        raise ValueError("propagated state vanished; cannot produce a unit vector")
    return full, full / nrm
