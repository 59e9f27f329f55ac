import math

import numpy as np
import pytest

from conftest import FIG1, FIG2, FIG3, random_state, random_unitary, schmidt_negativity
from qqent.dynamics import STATS_GRID, TimeGrid, make_propagator
from qqent.entanglement import (
    closed_form_negativity_xxx,
    find_peaks,
    negativity,
    negativity_batch,
    negativity_of_states,
    negativity_trace,
    partial_transpose,
    trace_stats,
)
from qqent.errors import ValidationError
from qqent.linalg import trace_norm_hermitian
from qqent.model import ModelParams
from qqent.states import density_from_state, product_density


def brute_partial_transpose(rho, side):
    out = np.zeros_like(rho)
    for i in range(2):
        for m in range(3):
            for j in range(2):
                for n in range(3):
                    if side == "qubit":
                        out[3 * j + m, 3 * i + n] = rho[3 * i + m, 3 * j + n]
                    else:
                        out[3 * i + n, 3 * j + m] = rho[3 * i + m, 3 * j + n]
    return out


def random_density(rng, n, rank=None):
    x = rng.normal(size=(n, rank or n)) + 1j * rng.normal(size=(n, rank or n))
    r = x @ x.conj().T
    return r / np.trace(r)


@pytest.mark.parametrize("side", ["qubit", "qutrit"])
def test_partial_transpose_matches_index_loop(side, rng):
    rho = rng.normal(size=(6, 6)) + 1j * rng.normal(size=(6, 6))
    np.testing.assert_array_equal(partial_transpose(rho, side), brute_partial_transpose(rho, side))
    stack = np.stack([rho, 2 * rho])
    np.testing.assert_array_equal(partial_transpose(stack, side)[1], brute_partial_transpose(2 * rho, side))


def test_partial_transpose_diagonal_unchanged():
    rho = np.diag(np.arange(1, 7) / 21)
    for side in ("qubit", "qutrit"):
        np.testing.assert_array_equal(partial_transpose(rho, side), rho)


def test_partial_transpose_of_product_is_state(rng):
    rho = product_density(random_density(rng, 2), random_density(rng, 3))
    for side in ("qubit", "qutrit"):
        pt = partial_transpose(rho, side)
        np.testing.assert_allclose(pt, pt.conj().T, atol=1e-15)
        assert np.trace(pt).real == pytest.approx(1)
        assert np.linalg.eigvalsh(pt).min() >= -1e-12


def test_partial_transpose_rejects_bad_input():
    with pytest.raises(ValidationError):
        partial_transpose(np.eye(4))
    with pytest.raises(ValidationError):
        partial_transpose(np.eye(6), side="both")


def test_reference_state_pt_spectrum(psi0):
    # pure-state PT spectrum is {s_i^2} U {+-s_i s_j}: with s = (1/sqrt2, 1/sqrt2)
    # that is {1/2, 1/2, 1/2, -1/2, 0, 0}
    pt = partial_transpose(density_from_state(psi0), "qubit")
    np.testing.assert_allclose(np.sort(np.linalg.eigvalsh(pt)), [-0.5, 0, 0, 0.5, 0.5, 0.5], atol=1e-14)
    assert trace_norm_hermitian(pt) == pytest.approx(2.0, abs=1e-13)
    assert negativity(density_from_state(psi0)) == pytest.approx(0.5, abs=1e-12)


def test_product_states_have_zero_negativity(rng):
    for _ in range(20):
        psi = np.kron(random_state(rng, 2), random_state(rng, 3))
        assert negativity(density_from_state(psi)) == 0.0


def test_negativity_matches_schmidt_oracle(rng):
    states = np.array([random_state(rng) for _ in range(100)])
    expected = [schmidt_negativity(s) for s in states]
    for side in ("qubit", "qutrit"):
        np.testing.assert_allclose(negativity_of_states(states, side), expected, atol=1e-12)


def test_side_symmetry(rng):
    states = np.array([random_state(rng) for _ in range(100)])
    np.testing.assert_allclose(
        negativity_of_states(states, "qubit"), negativity_of_states(states, "qutrit"), atol=1e-10
    )


def test_separable_mixtures_are_ppt(rng):
    for _ in range(50):
        k = rng.integers(1, 6)
        weights = rng.dirichlet(np.ones(k))
        rho = sum(
            w * product_density(random_density(rng, 2, 1), random_density(rng, 3, 1)) for w in weights
        )
        assert negativity(rho, "qubit") <= 1e-10
        assert negativity(rho, "qutrit") <= 1e-10


def test_local_unitary_invariance(rng):
    for _ in range(30):
        psi = random_state(rng)
        u = np.kron(random_unitary(rng, 2), random_unitary(rng, 3))
        assert negativity(density_from_state(u @ psi)) == pytest.approx(
            negativity(density_from_state(psi)), abs=1e-10
        )


def test_negativity_equals_half_trace_norm_excess(rng):
    for _ in range(10):
        rho = random_density(rng, 6)
        pt = partial_transpose(rho)
        assert negativity(rho) == pytest.approx(0.5 * (trace_norm_hermitian(pt) - 1), abs=1e-12)


def test_batch_negativity_validates():
    with pytest.raises(ValidationError):
        negativity_batch(np.ones((2, 6, 6)) * 1j)


def test_closed_form_initial_value():
    assert closed_form_negativity_xxx(FIG1, 0.0) == pytest.approx(0.5, abs=1e-15)


def test_closed_form_requires_isotropic_plane():
    with pytest.raises(ValidationError):
        closed_form_negativity_xxx(FIG3, 1.0)


@pytest.mark.parametrize("params, expected_min", [(FIG1, 0.3936), (FIG2, 0.2637)])
def test_closed_form_minimum(params, expected_min):
    t = np.linspace(0, 40, 400001)
    assert closed_form_negativity_xxx(params, t).min() == pytest.approx(expected_min, abs=5e-5)


def test_fig1_extrema_from_bloch_vector():
    # Block (|02>, |11>) carries weight 3/4; its normalized Bloch vector starts at
    # z = -1/3 and precesses about n = (1/sqrt2, -1/sqrt2, -1/4) / W, W = sqrt(17)/4,
    # so z(t) spans -3/17 -+ 8 sqrt2 / 17 and P = |<11|psi>|^2 = 3/4 (1 - z) / 2.
    t = np.linspace(0, 2 * math.pi / (math.sqrt(17) / 2), 200001)
    n = closed_form_negativity_xxx(FIG1, t)
    z_lo = (-3 - 8 * math.sqrt(2)) / 17
    z_hi = (-3 + 8 * math.sqrt(2)) / 17
    n_z_lo, n_z_hi = (math.sqrt(p * (1 - p)) for p in (0.375 * (1 - z_lo), 0.375 * (1 - z_hi)))
    assert n.min() == pytest.approx(n_z_hi, abs=1e-9)
    assert n_z_hi == pytest.approx(0.3936, abs=5e-5)
    # the other turning point is a local minimum near 0.462
    troughs = find_peaks(-n)
    assert np.any(np.abs(n[troughs] - n_z_lo) < 1e-9)
    assert n_z_lo == pytest.approx(0.4622, abs=5e-5)


@pytest.mark.parametrize("params", [FIG1, FIG2])
def test_trace_matches_closed_form(params, psi0):
    tr = negativity_trace(make_propagator(params), psi0, TimeGrid(0, 50, 0.01))
    np.testing.assert_allclose(tr.values, closed_form_negativity_xxx(params, tr.times), atol=1e-8)


def test_trace_stats_basic():
    s = trace_stats([0, 1, 2], [1.0, 0.0, 1.0])
    assert (s.min, s.max, s.time_average, s.argmin_t, s.argmax_t) == (0.0, 1.0, 0.5, 1.0, 0.0)
    assert trace_stats([3.0], [0.2]).time_average == 0.2
    with pytest.raises(ValidationError):
        trace_stats([], [])


def test_product_trace_is_zero():
    from qqent.states import InitialStateSpec, build_initial_state

    psi = build_initial_state(InitialStateSpec(alpha1=0, beta1=0, theta=0))
    tr = negativity_trace(make_propagator(FIG1), psi, TimeGrid(0, 20, 0.01))
    assert np.all(tr.values == 0.0)


def test_trace_bounds_and_ordering(psi0):
    tr = negativity_trace(make_propagator(FIG3), psi0, STATS_GRID)
    assert len(tr.values) == len(tr.times) == 40001
    assert tr.values.min() >= 0 and tr.values.max() <= 0.5 + 1e-9
    assert tr.stats.min <= tr.stats.time_average <= tr.stats.max


def test_find_peaks():
    np.testing.assert_array_equal(find_peaks([0, 1, 0, 2, 2, 0, 3, 1]), [1, 6])
