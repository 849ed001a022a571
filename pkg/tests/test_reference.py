from __future__ import annotations

import numpy as np
import pytest
import scipy.linalg

from wavesplit.circuits import ModeSystem
from wavesplit.reference import (
    ModePairs,
    decode_state,
    dense_expm,
    encode_initial,
    exact_solution,
    hermitian_split,
    mode_propagator,
    spectral_pairs,
)

rng = np.random.default_rng(23)


def generator(omega: float, gamma: float) -> np.ndarray:
    return np.array([[0.0, omega], [-omega, -gamma]])


# ------------------------------------------------------------ mode propagator


@pytest.mark.parametrize("omega,gamma", [
    (6.0, 1.0),     # underdamped
    (0.3, 2.0),     # overdamped
    (1.0, 2.0),     # critically damped, omega = gamma/2 exactly
    (0.0, 1.5),     # zero mode, pure velocity decay
    (4.0, 0.0),     # undamped rotation
])
def test_mode_propagator_matches_expm(omega, gamma):
    for t in (0.0, 0.17, 1.3):
        mine = mode_propagator(omega, gamma, t)
        ref = scipy.linalg.expm(generator(omega, gamma) * t)
        assert np.max(np.abs(mine - ref)) < 1e-13


def test_mode_propagator_continuity_at_critical_branch():
    gamma = 2.0
    t = 0.9
    at = mode_propagator(1.0, gamma, t)
    for eps in (1e-9, -1e-9):
        near = mode_propagator(1.0 + eps, gamma, t)
        assert np.max(np.abs(near - at)) < 1e-7


def test_mode_propagator_rejects_negative_rates():
    with pytest.raises(ValueError):
        mode_propagator(1.0, -0.1, 1.0)
    with pytest.raises(ValueError):
        mode_propagator(-1.0, 0.1, 1.0)


def test_mode_propagator_backward_time_inverts():
    p_fwd = mode_propagator(3.0, 1.2, 0.4)
    p_bwd = mode_propagator(3.0, 1.2, -0.4)
    assert np.max(np.abs(p_fwd @ p_bwd - np.eye(2))) < 1e-13


def test_undamped_propagator_is_rotation():
    p = mode_propagator(2.0, 0.0, 0.25)
    th = 0.5
    expected = np.array([[np.cos(th), np.sin(th)], [-np.sin(th), np.cos(th)]])
    assert np.max(np.abs(p - expected)) < 1e-15


# ---------------------------------------------------------------- dense expm


def test_dense_expm_against_scipy():
    for dim in (2, 5, 8):
        for _ in range(5):
            m = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
            ref = scipy.linalg.expm(m)
            err = np.max(np.abs(dense_expm(m) - ref)) / np.max(np.abs(ref))
            assert err < 1e-12


def test_dense_expm_time_argument():
    m = rng.standard_normal((4, 4))
    assert np.max(np.abs(dense_expm(m, 0.3) - scipy.linalg.expm(0.3 * m))) < 1e-12


def test_dense_expm_nilpotent():
    m = np.array([[0.0, 1.0], [0.0, 0.0]])
    assert np.array_equal(dense_expm(m), np.array([[1.0, 1.0], [0.0, 1.0]]))


def test_dense_expm_dimension_cap():
    with pytest.raises(ValueError):
        dense_expm(np.eye(65))


# ------------------------------------------------------------ decompositions


def test_hermitian_split_reconstructs():
    m = rng.standard_normal((6, 6)) + 1j * rng.standard_normal((6, 6))
    h1, h2 = hermitian_split(m)
    assert np.max(np.abs(h1 - h1.conj().T)) < 1e-14
    assert np.max(np.abs(h2 - h2.conj().T)) < 1e-14
    assert np.max(np.abs(h1 + 1j * h2 - m)) < 1e-14


# ------------------------------------------------------------- spectral maps


def test_spectral_pairs_single_cosine():
    n_pts = 8
    k = np.arange(n_pts)
    phi = np.cos(2 * np.pi * k / n_pts)
    pairs = spectral_pairs(phi, np.zeros(n_pts))
    expected = np.zeros(n_pts, dtype=complex)
    expected[1] = np.sqrt(n_pts) / 2
    expected[n_pts - 1] = np.sqrt(n_pts) / 2
    assert np.max(np.abs(pairs.u - expected)) < 1e-13
    assert np.max(np.abs(pairs.v)) == 0.0


def test_spectral_pairs_norm_preserved():
    phi = rng.standard_normal(16)
    dphi = rng.standard_normal(16)
    dphi -= dphi.mean()  # no zero-frequency velocity
    pairs = spectral_pairs(phi, dphi)
    assert pairs.concat().shape == (32,)
    assert np.linalg.norm(pairs.concat()) == pytest.approx(
        np.linalg.norm(np.concatenate([phi, dphi])), rel=1e-13)


def test_spectral_pairs_rejects_dc_velocity():
    with pytest.raises(ValueError):
        spectral_pairs(np.ones(8), np.ones(8))


def test_spectral_pairs_rejects_bad_shapes():
    with pytest.raises(ValueError):
        spectral_pairs(np.ones(6), np.zeros(6))
    with pytest.raises(ValueError):
        spectral_pairs(np.ones(8), np.zeros(4))


def test_spectral_pairs_multidim():
    phi = rng.standard_normal((4, 4))
    pairs = spectral_pairs(phi, np.zeros((4, 4)))
    assert pairs.n_modes == 16
    # axis 0 is the fastest index in the flattening
    spectrum = np.fft.ifftn(phi) * 4.0
    assert pairs.u[1] == pytest.approx(spectrum[1, 0], abs=1e-13)
    assert pairs.u[4] == pytest.approx(spectrum[0, 1], abs=1e-13)


# ------------------------------------------------------------ encode / decode


def test_encode_initial_layout():
    phi = rng.standard_normal(16)
    state = encode_initial(phi, np.zeros(16))
    assert state.n_qubits == 4 + 2
    assert state.magnitude == 1.0
    flat = state.amp.reshape(-1)
    assert np.max(np.abs(flat[32:])) == 0.0  # ancilla |0>
    assert np.linalg.norm(flat) == pytest.approx(1.0, abs=1e-14)


def test_encode_decode_round_trip():
    phi = rng.standard_normal(16)
    dphi = rng.standard_normal(16)
    dphi -= dphi.mean()
    state = encode_initial(phi, dphi)
    back_phi, back_dphi = decode_state(state)
    scale = np.linalg.norm(np.concatenate([phi, dphi]))
    assert np.max(np.abs(back_phi * scale - phi)) < 1e-12
    assert np.max(np.abs(back_dphi * scale - dphi)) < 1e-12


def test_decode_restores_shape():
    phi = rng.standard_normal((4, 4))
    state = encode_initial(phi, np.zeros((4, 4)))
    back_phi, _ = decode_state(state, shape=(4, 4))
    assert back_phi.shape == (4, 4)


# ------------------------------------------------------------- exact solution


def test_exact_solution_identity_at_t0():
    sys4 = ModeSystem(n=4, gamma=0.8)
    u = rng.standard_normal(16) + 0j
    v = rng.standard_normal(16) + 0j
    v[0] = 0.0
    pairs = ModePairs(u, v)
    full, unit = exact_solution(sys4, pairs, 0.0)
    start = pairs.concat()
    assert np.max(np.abs(full - start)) < 1e-14
    assert np.max(np.abs(unit - start / np.linalg.norm(start))) < 1e-14


def test_exact_solution_energy_conserved_without_damping():
    sys4 = ModeSystem(n=4, gamma=0.0)
    u = rng.standard_normal(16) + 0j
    pairs = ModePairs(u, np.zeros(16, dtype=complex))
    scale = np.linalg.norm(pairs.concat())
    for t in (0.3, 1.7):
        full, unit = exact_solution(sys4, pairs, t)
        assert np.linalg.norm(full) == pytest.approx(scale, rel=1e-13)
        assert np.linalg.norm(unit) == pytest.approx(1.0, abs=1e-13)


def test_exact_solution_matches_per_mode_propagator():
    sys3 = ModeSystem(n=3, gamma=0.6)
    u = rng.standard_normal(8) + 0j
    v = rng.standard_normal(8) + 0j
    v[0] = 0.0
    pairs = ModePairs(u, v)
    t = 0.42
    full, _ = exact_solution(sys3, pairs, t)
    start = pairs.concat()
    for j in range(8):
        prop = mode_propagator(sys3.omega(j), sys3.gamma, t)
        out = prop @ np.array([start[j], start[j + 8]])
        assert abs(full[j] - out[0]) < 1e-13
        assert abs(full[j + 8] - out[1]) < 1e-13
