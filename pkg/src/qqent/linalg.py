"""Dense complex kernels: Hermitian eigendecomposition, unitary synthesis, trace norm.

Matrices are plain ``numpy`` complex arrays. The eigensolver is a cyclic
complex Jacobi iteration (see ``_jacobi``) so results are reproducible bit for
bit and independent of the LAPACK build.
"""
from typing import Callable, NamedTuple

import numpy as np

from ._jacobi import jacobi_eigh
from .errors import ValidationError

HERMITIAN_TOL = 1e-12
PHASE_TOL = 1e-12


class EigenSystem(NamedTuple):
    eigenvalues: np.ndarray  # ascending, real
    eigenvectors: np.ndarray  # columns are eigenvectors


def check_hermitian(m, tol=HERMITIAN_TOL):
    """Return ``m`` as a complex array, raising if it is not square and Hermitian."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {m.shape}")
    diff = np.abs(m - m.conj().T)
    if diff.size and diff.max() > tol:
        i, j = np.unravel_index(np.argmax(diff), diff.shape)
        i, j = min(i, j), max(i, j)
        raise ValidationError(
            f"matrix is not Hermitian: entries ({i}, {j}) = {m[i, j]} and "
            f"({j}, {i}) = {m[j, i]} are not conjugates"
        )
    return m


def hermitian_eig(m) -> EigenSystem:
    """Eigendecomposition of a Hermitian matrix with ascending eigenvalues."""
    m = check_hermitian(m)
    w, v = jacobi_eigh(m[None])
    return EigenSystem(w[0], v[0])


def hermitian_eigvals_batch(stack):
    """Ascending eigenvalues for a (batch, n, n) stack of Hermitian matrices.

    Only a vectorized Hermiticity check is done here; this is the hot path used
    for negativity time series.
    """
    stack = np.asarray(stack, dtype=np.complex128)
    if stack.ndim != 3 or stack.shape[1] != stack.shape[2]:
        raise ValidationError(f"expected a (batch, n, n) stack, got shape {stack.shape}")
    if stack.shape[0] == 0:
        return np.empty((0, stack.shape[1]))
    skew = np.abs(stack - stack.conj().transpose(0, 2, 1)).max()
    if skew > HERMITIAN_TOL:
        raise ValidationError(f"stack contains a non-Hermitian matrix (max |M - M^H| = {skew:.3g})")
    w, _ = jacobi_eigh(stack)
    return w


def unitary_from_spectrum(es: EigenSystem, phase_fn: Callable[[np.ndarray], np.ndarray]):
    """Build V diag(phase_fn(lambda)) V^H.

    ``phase_fn`` receives the eigenvalue array and must return unit-modulus
    complex numbers, e.g. ``lambda lam: np.exp(-1j * lam * t)``.
    """
    phases = np.asarray(phase_fn(es.eigenvalues), dtype=np.complex128)
    phases = np.broadcast_to(phases, es.eigenvalues.shape)
    bad = np.abs(np.abs(phases) - 1.0) > PHASE_TOL
    if bad.any():
        k = int(np.argmax(bad))
        raise ValidationError(
            f"phase_fn returned {phases[k]} (modulus {abs(phases[k]):.15g}) "
            f"for eigenvalue {es.eigenvalues[k]}; expected unit modulus"
        )
    v = es.eigenvectors
    return (v * phases) @ v.conj().T


def trace_norm_hermitian(m) -> float:
    """Sum of absolute eigenvalues of a Hermitian matrix."""
    return float(np.sum(np.abs(hermitian_eig(m).eigenvalues)))
