"""Partial transpose, negativity and negativity time series."""
import math
from dataclasses import dataclass

import numpy as np

from .dynamics import Propagator, TimeGrid, evolve_many
from .errors import ValidationError
from .linalg import hermitian_eigvals_batch
from .model import DIM, QUBIT_DIM, QUTRIT_DIM, ModelParams, hamiltonian_closed_form
from .states import density_batch

CLAMP = 1e-12
SIDES = ("qubit", "qutrit")


def _check_side(side):
    if side not in SIDES:
        raise ValidationError(f"side must be 'qubit' or 'qutrit', got {side!r}")


def partial_transpose(rho, side="qubit"):
    """Transpose the indices of one tensor factor of a 2x3 operator.

    Accepts a single (6, 6) matrix or a (batch, 6, 6) stack.
    """
    _check_side(side)
    rho = np.asarray(rho, dtype=np.complex128)
    if rho.shape[-2:] != (DIM, DIM):
        raise ValidationError(f"expected a {DIM}x{DIM} operator on the 2x3 space, got shape {rho.shape}")
    lead = rho.shape[:-2]
    r = rho.reshape(lead + (QUBIT_DIM, QUTRIT_DIM, QUBIT_DIM, QUTRIT_DIM))
    k = len(lead)
    axes = list(range(k))
    if side == "qubit":
        axes += [k + 2, k + 1, k, k + 3]
    else:
        axes += [k, k + 3, k + 2, k + 1]
    return r.transpose(axes).reshape(rho.shape)


def _negativity_from_eigvals(w):
    neg = np.sum(np.where(w < 0.0, -w, 0.0), axis=-1)
    return np.where(neg < CLAMP, 0.0, neg)


def negativity(rho, side="qubit"):
    """Sum of |negative eigenvalues| of the partial transpose (tiny values clamp to 0)."""
    return float(negativity_batch(np.asarray(rho)[None], side)[0])


def negativity_batch(rhos, side="qubit"):
    w = hermitian_eigvals_batch(partial_transpose(rhos, side))
    return _negativity_from_eigvals(w)


def negativity_of_states(states, side="qubit"):
    """Negativity of each pure state in a (n, 6) array."""
    return negativity_batch(density_batch(states), side)


@dataclass(frozen=True)
class TraceStats:
    min: float
    max: float
    time_average: float
    argmin_t: float
    argmax_t: float

    def as_dict(self):
        return {
            "min": self.min,
            "max": self.max,
            "time_average": self.time_average,
            "argmin_t": self.argmin_t,
            "argmax_t": self.argmax_t,
        }


def trace_stats(times, values):
    """Extrema and trapezoidal time average of a sampled series."""
    times = np.asarray(times, dtype=float)
    values = np.asarray(values, dtype=float)
    if times.shape != values.shape or times.size == 0:
        raise ValidationError("times and values must be non-empty and of equal length")
    i_min = int(np.argmin(values))
    i_max = int(np.argmax(values))
    if times.size == 1:
        avg = float(values[0])
    else:
        avg = float(np.trapezoid(values, times) / (times[-1] - times[0]))
    # guards the ordering invariant against last-bit rounding in the average
    avg = min(max(avg, float(values[i_min])), float(values[i_max]))
    return TraceStats(
        float(values[i_min]), float(values[i_max]), avg, float(times[i_min]), float(times[i_max])
    )


@dataclass(frozen=True)
class NegativityTrace:
    times: np.ndarray
    values: np.ndarray
    stats: TraceStats


def negativity_trace(prop: Propagator, psi0, grid: TimeGrid, side="qubit") -> NegativityTrace:
    _check_side(side)
    times = grid.times()
    values = negativity_of_states(evolve_many(prop, psi0, times), side)
    return NegativityTrace(times, values, trace_stats(times, values))


def find_peaks(values):
    """Indices of samples strictly greater than both neighbours."""
    v = np.asarray(values)
    inner = (v[1:-1] > v[:-2]) & (v[1:-1] > v[2:])
    return np.flatnonzero(inner) + 1


def find_troughs(values):
    return find_peaks(-np.asarray(values))


def _two_level_amplitude(p: ModelParams, t):
    """<11|psi(t)> for the reference initial state |00>/2 + |02>/2 + |11>/sqrt(2).

    With J_x = J_y the pair (|02>, |11>) is closed under H, so the amplitude
    follows from the two-level rotation
        exp(-iKt) = e^{-imt} [cos(Wt) 1 - i sin(Wt)/W (K - m 1)],
    K = [[h1, c], [c*, h2]], m = (h1 + h2)/2, W = sqrt(((h1 - h2)/2)^2 + |c|^2).
    """
    h = hamiltonian_closed_form(p)
    h1, h2, c = h[2, 2].real, h[4, 4].real, h[2, 4]
    m = 0.5 * (h1 + h2)
    delta = 0.5 * (h1 - h2)
    omega = math.sqrt(delta * delta + abs(c) ** 2)
    a0, b0 = 0.5, 1.0 / math.sqrt(2.0)
    t = np.asarray(t, dtype=float)
    if omega == 0.0:
        return np.exp(-1j * m * t) * b0
    sinc = np.sin(omega * t) / omega
    return np.exp(-1j * m * t) * (np.cos(omega * t) * b0 - 1j * sinc * (np.conj(c) * a0 - delta * b0))


def closed_form_negativity_xxx(p: ModelParams, t):
    """Negativity sqrt(P (1 - P)), P = |<11|psi(t)>|^2, for the reference initial state.

    Requires J_x = J_y. Accepts scalar or array ``t``.
    """
    if p.j_x != p.j_y:
        raise ValidationError(f"closed form needs j_x == j_y, got j_x={p.j_x}, j_y={p.j_y}")
    prob = np.abs(_two_level_amplitude(p, t)) ** 2
    out = np.sqrt(np.clip(prob * (1.0 - prob), 0.0, None))
    return float(out) if out.ndim == 0 else out
