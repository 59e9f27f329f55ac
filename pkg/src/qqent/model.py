"""Qubit-qutrit Heisenberg Hamiltonian with z-axis DM coupling and local z fields.

Basis ordering is |q t> -> 3*q + t for qubit level q in {0, 1} and qutrit
level t in {0, 1, 2}, i.e. |00>, |01>, |02>, |10>, |11>, |12>. Qubit |0> has
sigma_z = +1 and qutrit levels 0, 1, 2 carry S_z = +1, 0, -1.

    H = 1/2 B_qb sz(x)1 + B_qt 1(x)Sz + 1/2 D_z (sx(x)Sy - sy(x)Sx)
        + 1/2 (J_x sx(x)Sx + J_y sy(x)Sy + J_z sz(x)Sz)
"""
import math
import warnings
from dataclasses import asdict, dataclass
from typing import NamedTuple

import numpy as np

from .errors import ValidationError

QUBIT_DIM = 2
QUTRIT_DIM = 3
DIM = QUBIT_DIM * QUTRIT_DIM


@dataclass(frozen=True)
class ModelParams:
    j_x: float = 0.0
    j_y: float = 0.0
    j_z: float = 0.0
    d_x: float = 0.0
    d_y: float = 0.0
    d_z: float = 0.0
    b_qb: float = 0.0
    b_qt: float = 0.0

    def __post_init__(self):
        for name, value in asdict(self).items():
            try:
                value = float(value)
            except (TypeError, ValueError):
                raise ValidationError(f"model.{name} must be a real number, got {value!r}") from None
            if not math.isfinite(value):
                raise ValidationError(f"model.{name} must be finite, got {value!r}")
            object.__setattr__(self, name, value)

    @property
    def is_xxx(self):
        return self.j_x == self.j_y == self.j_z


class BasisIndex(NamedTuple):
    qubit_level: int
    qutrit_level: int

    @property
    def flat(self):
        return QUTRIT_DIM * self.qubit_level + self.qutrit_level

    @classmethod
    def from_flat(cls, flat):
        if not 0 <= flat < DIM:
            raise ValidationError(f"flat basis index must be in 0..5, got {flat}")
        return cls(*divmod(flat, QUTRIT_DIM))

    @property
    def label(self):
        return f"|{self.qubit_level}{self.qutrit_level}>"


BASIS_LABELS = [BasisIndex.from_flat(k).label for k in range(DIM)]

_SQRT_HALF = 1.0 / math.sqrt(2.0)

_PAULI = {
    "x": np.array([[0, 1], [1, 0]], dtype=np.complex128),
    "y": np.array([[0, -1j], [1j, 0]], dtype=np.complex128),
    "z": np.array([[1, 0], [0, -1]], dtype=np.complex128),
}

_SPIN1 = {
    "x": _SQRT_HALF * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=np.complex128),
    "y": _SQRT_HALF * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=np.complex128),
    "z": np.array([[1, 0, 0], [0, 0, 0], [0, 0, -1]], dtype=np.complex128),
}


def _lookup(table, axis, what):
    try:
        return table[axis].copy()
    except KeyError:
        raise ValidationError(f"{what} axis must be one of 'x', 'y', 'z', got {axis!r}") from None


def pauli(axis):
    """Pauli matrix for ``axis`` in the (|0>, |1>) basis with sigma_z|0> = |0>."""
    return _lookup(_PAULI, axis, "pauli")


def spin1(axis):
    """Spin-1 matrix for ``axis`` in the (|0>, |1>, |2>) basis, m = +1, 0, -1."""
    return _lookup(_SPIN1, axis, "spin1")


def kron(a, b):
    """Kronecker product, left factor is the qubit."""
    return np.kron(np.asarray(a, dtype=np.complex128), np.asarray(b, dtype=np.complex128))


def build_hamiltonian(p: ModelParams):
    """Assemble the 6x6 Hamiltonian from spin operators."""
    if p.d_x != 0.0 or p.d_y != 0.0:
        warnings.warn(
            "d_x and d_y are stored but do not enter the Hamiltonian (only D_z couples)",
            stacklevel=2,
        )
    sx, sy, sz = pauli("x"), pauli("y"), pauli("z")
    Sx, Sy, Sz = spin1("x"), spin1("y"), spin1("z")
    h = (
        0.5 * p.b_qb * kron(sz, np.eye(3))
        + p.b_qt * kron(np.eye(2), Sz)
        + 0.5 * p.d_z * (kron(sx, Sy) - kron(sy, Sx))
        + 0.5 * (p.j_x * kron(sx, Sx) + p.j_y * kron(sy, Sy) + p.j_z * kron(sz, Sz))
    )
    # symmetrize away rounding so the result is Hermitian bit for bit
    return 0.5 * (h + h.conj().T)


def hamiltonian_closed_form(p: ModelParams):
    """Hamiltonian written entry by entry from the published matrix elements.

    Independent of ``build_hamiltonian``; used to validate it. Entries not set
    here are identically zero.
    """
    r8 = 2.0 * math.sqrt(2.0)
    aniso = (p.j_x - p.j_y) / r8
    up = (2j * p.d_z + p.j_x + p.j_y) / r8
    down = (-2j * p.d_z + p.j_x + p.j_y) / r8
    h = np.zeros((DIM, DIM), dtype=np.complex128)
    h[0, 0] = 0.5 * (p.b_qb + 2 * p.b_qt + p.j_z)
    h[0, 4] = aniso
    h[1, 1] = p.b_qb / 2
    h[1, 3] = up
    h[1, 5] = aniso
    h[2, 2] = 0.5 * (p.b_qb - 2 * p.b_qt - p.j_z)
    h[2, 4] = up
    h[3, 1] = down
    h[3, 3] = -p.b_qb / 2 + p.b_qt - p.j_z / 2
    h[4, 0] = aniso
    h[4, 2] = down
    h[4, 4] = -p.b_qb / 2
    h[5, 1] = aniso
    h[5, 5] = 0.5 * (-p.b_qb - 2 * p.b_qt + p.j_z)
    return h


# Entries (1-based row, col) that vanish for every parameter choice.
STRUCTURAL_ZEROS = [
    (1, 2), (1, 3), (1, 4), (1, 6), (2, 1), (2, 3), (2, 5), (3, 1), (3, 2), (3, 4),
    (3, 6), (4, 1), (4, 3), (4, 5), (4, 6), (5, 2), (5, 4), (5, 6), (6, 1), (6, 3),
    (6, 4), (6, 5),
]
