"""Exact propagation psi(t) = exp(-iHt) psi(0) through the spectrum of H."""
import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .linalg import EigenSystem, hermitian_eig, unitary_from_spectrum
from .model import DIM, ModelParams, build_hamiltonian


@dataclass(frozen=True)
class TimeGrid:
    t_start: float = 0.0
    t_end: float = 20.0
    step: float = 0.01

    def __post_init__(self):
        for name in ("t_start", "t_end", "step"):
            value = getattr(self, name)
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise ValidationError(f"grid.{name} must be a number, got {value!r}") from None
            if not math.isfinite(value):
                raise ValidationError(f"grid.{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)
        if self.step <= 0:
            raise ValidationError(f"grid.step must be positive, got {self.step}")
        if self.t_end < self.t_start:
            raise ValidationError(f"grid.t_end ({self.t_end}) is before grid.t_start ({self.t_start})")

    @property
    def size(self):
        # tolerate representation error, e.g. (20 - 0) / 0.01 = 1999.9999999999998
        return int(math.floor((self.t_end - self.t_start) / self.step + 1e-9)) + 1

    def times(self):
        return self.t_start + self.step * np.arange(self.size)


# Window used for reported min / max / time-average statistics.
STATS_GRID = TimeGrid(0.0, 200.0, 0.005)
PLOT_GRID = TimeGrid(0.0, 20.0, 0.01)


@dataclass(frozen=True)
class Propagator:
    params: ModelParams
    hamiltonian: np.ndarray
    eigensystem: EigenSystem

    def unitary(self, t):
        t = float(t)
        return unitary_from_spectrum(self.eigensystem, lambda lam: np.exp(-1j * lam * t))

    @property
    def energies(self):
        return self.eigensystem.eigenvalues


def make_propagator(p: ModelParams) -> Propagator:
    h = build_hamiltonian(p)
    return Propagator(p, h, hermitian_eig(h))


def _check_state(psi):
    psi = np.asarray(psi, dtype=np.complex128)
    if psi.shape != (DIM,):
        raise ValidationError(f"expected {DIM} amplitudes, got shape {psi.shape}")
    return psi


def evolve(prop: Propagator, psi0, t):
    """U(t) psi0. Negative t runs the evolution backwards."""
    return evolve_many(prop, psi0, np.array([float(t)]))[0]


def evolve_many(prop: Propagator, psi0, times):
    """States at each time as a (len(times), 6) array."""
    psi0 = _check_state(psi0)
    lam, v = prop.eigensystem
    coeffs = v.conj().T @ psi0
    phases = np.exp(-1j * np.outer(np.asarray(times, dtype=float), lam))
    return (phases * coeffs) @ v.T


def state_trajectory(prop: Propagator, psi0, grid: TimeGrid):
    return evolve_many(prop, psi0, grid.times())
